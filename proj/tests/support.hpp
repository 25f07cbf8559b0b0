#pragma once

// Seeded generators and corpora shared by the unit tests and the acceptance
// binary.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "crossbi/catalog.hpp"
#include "crossbi/solve.hpp"

namespace crossbi {

// Readable gtest output for maps.
inline void PrintTo(const LinMap &m, std::ostream *os) {
    *os << m.domain().to_string() << " -> " << m.codomain().to_string() << " [";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        *os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c)
            *os << (c ? " " : "") << m(r, c);
    }
    *os << "]";
}

} // namespace crossbi

namespace crossbi::testing {

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F5 = FieldSpec::prime(5);

inline std::string failures(const CheckReport &r) {
    std::string s;
    for (const auto &n : r.failed_names())
        s += (s.empty() ? "" : " ") + n;
    return s.empty() ? "(none)" : s;
}

// SplitMix64.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Uniform over F_p; over Q a small fraction.
    Scalar scalar(const FieldSpec &f) {
        if (!f.is_rational())
            return f.from_int(static_cast<long>(below(f.characteristic())));
        const long num = static_cast<long>(below(7)) - 3;
        const long den = static_cast<long>(below(3)) + 1;
        return f.from_fraction(num, den);
    }
    Scalar nonzero(const FieldSpec &f) {
        for (;;) {
            auto s = scalar(f);
            if (!s.is_zero())
                return s;
        }
    }
    LinMap map(const FieldSpec &f, const Shape &dom, const Shape &cod) {
        LinMap m(f, dom, cod);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = scalar(f);
        return m;
    }

  private:
    std::uint64_t state_;
};

inline Vec basis_vec(const FieldSpec &f, std::size_t n, std::size_t i) {
    Vec v(n, f.zero());
    v[i] = f.one();
    return v;
}

inline AlgebraData zn(std::size_t n, const FieldSpec &f) { return group_algebra(n, f).bia.alg; }

// A (x) k[Z_v] with the flip as twisting map.
inline CrossedData tensor_crossed(const AlgebraData &A, std::size_t v) {
    return as_crossed(TwistingMapData{A, zn(v, A.field), swap(A.field, v, A.dim)});
}

// k[Z_4] as k[Z_2] (x) V with V = span(1, t), t^2 = g: h^(2i+j) <-> g^i (x) t^j.
inline CrossedData z4_crossed(const FieldSpec &f) {
    const auto A = zn(2, f);
    CrossedData d{A, PointedSpace::element(f, basis_vec(f, 2, 0)), swap(f, 2, 2),
                  LinMap(f, Shape{2, 2}, Shape{2, 2})};
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            d.sigma.at(((j + k) / 2) * 2 + (j + k) % 2, j * 2 + k) = f.one();
    return d;
}

// R and sigma random except on the unit legs, where brz1 and brz2 force them.
// Requires the units of A and V to be the basis element 0.
inline CrossedData normalized_random(Gen &g, const AlgebraData &A, std::size_t v) {
    const auto &f = A.field;
    const auto a = A.dim;
    CrossedData d{A, PointedSpace::element(f, basis_vec(f, v, 0)), g.map(f, Shape{v, a}, Shape{a, v}),
                  g.map(f, Shape{v, v}, Shape{a, v})};
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < a; ++j) {
            if (i != 0 && j != 0)
                continue;
            for (std::size_t r = 0; r < a * v; ++r)
                d.R.at(r, i * a + j) = f.zero();
            d.R.at(j * v + i, i * a + j) = f.one();
        }
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t k = 0; k < v; ++k) {
            if (i != 0 && k != 0)
                continue;
            for (std::size_t r = 0; r < a * v; ++r)
                d.sigma.at(r, i * v + k) = f.zero();
            d.sigma.at(i == 0 ? k : i, i * v + k) = f.one();
        }
    return d;
}

inline CrossedData fully_random(Gen &g, const AlgebraData &A, std::size_t v) {
    const auto &f = A.field;
    return CrossedData{A, PointedSpace::element(f, basis_vec(f, v, 0)), g.map(f, Shape{v, A.dim}, Shape{A.dim, v}),
                       g.map(f, Shape{v, v}, Shape{A.dim, v})};
}

// Adds a nonzero scalar to one entry outside the unit legs.
inline CrossedData perturbed(Gen &g, CrossedData d) {
    const auto &f = d.A.field;
    const auto a = d.A.dim, v = d.V.dim;
    if (v < 2)
        return d;
    if (a > 1 && g.below(2) == 0) {
        const auto i = 1 + g.below(v - 1), j = 1 + g.below(a - 1);
        d.R.at(g.below(a * v), i * a + j) += g.nonzero(f);
    } else {
        const auto i = 1 + g.below(v - 1), k = 1 + g.below(v - 1);
        d.sigma.at(g.below(a * v), i * v + k) += g.nonzero(f);
    }
    return d;
}

// theta(1_V) = 1_A (x) 1_V, other columns uniform.
inline LinMap random_unital_theta(Gen &g, const CrossedData &d) {
    const auto &f = d.A.field;
    LinMap t = g.map(f, Shape{d.V.dim}, Shape{d.A.dim, d.V.dim});
    const auto one = tensor(d.A.unit_map(), d.V.as_map());
    // Column of 1_V: the unit of V is a basis vector in every corpus entry.
    std::size_t u = 0;
    while (d.V.point[u].is_zero())
        ++u;
    for (std::size_t r = 0; r < t.rows(); ++r)
        t.at(r, u) = one(r, 0);
    return t;
}

// The valid crossed products with dims <= 3 used as twisting bases.
inline std::vector<CrossedData> valid_bases(const FieldSpec &f) {
    std::vector<CrossedData> out;
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t v = 1; v <= 3; ++v)
            out.push_back(tensor_crossed(zn(a, f), v));
    out.push_back(z4_crossed(f));
    return out;
}

// Catalog objects viewed as crossed products by leg reversal.
inline std::vector<CrossedData> catalog_crossed(const FieldSpec &f) {
    return {reflect(drinfeld_double(group_algebra(2, f)).as_mirror), reflect(radford_biproduct_z2(f).alg),
            reflect(drinfeld_double(group_algebra(3, f)).as_mirror), z4_crossed(f)};
}

// The transpose of a crossed product is a crossed coproduct (after leg
// reversal) on X = V*, C = A*cop.
inline CoCrossedData dual_cocrossed(const CrossedData &d) {
    const auto &f = d.A.field;
    CoalgebraData Ad{f, d.A.dim, d.A.mult.transpose(), LinMap::from_functional(f, Shape{d.A.dim}, d.A.unit)};
    return CoCrossedData{PointedSpace::functional(f, d.V.point), coopposite(Ad), reflect(d.R.transpose()),
                         reflect(d.sigma.transpose())};
}

inline bool brz_verdict(const CheckReport &r) {
    for (const char *n : {"brz1", "brz2", "brz3", "brz4", "brz5"})
        if (!r.passed(n))
            return false;
    return true;
}

inline bool brute_verdict(const CheckReport &r) {
    for (const char *n : {"assoc", "unit_left", "unit_right", "left_A_property"})
        if (!r.passed(n))
            return false;
    return true;
}

inline bool cobrz_verdict(const CheckReport &r) {
    for (const char *n : {"cobrz1", "cobrz2", "cobrz3", "cobrz4", "cobrz5"})
        if (!r.passed(n))
            return false;
    return true;
}

inline bool cobrute_verdict(const CheckReport &r) {
    for (const char *n : {"coassoc", "counit_left", "counit_right", "defining_property"})
        if (!r.passed(n))
            return false;
    return true;
}

// R(v (x) a) = (1 (x) v)(a (x) 1) and sigma(u, v) = (1 (x) u)(1 (x) v), read off the
// product. Unit-normalized data is recovered exactly.
inline CrossedData renormalized(const CrossedData &d) {
    const auto &f = d.A.field;
    const auto a = d.A.dim, v = d.V.dim;
    const auto m = crossed_multiplication(d).reshaped(Shape{a, v, a, v}, Shape{a, v});
    const auto idA = LinMap::identity(f, Shape{d.A.dim});
    const auto idV = LinMap::identity(f, Shape{d.V.dim});
    const auto one = d.A.unit_map(), oneV = d.V.as_map();
    return CrossedData{d.A, d.V, compose(m, tensor({one, idV, idA, oneV})), compose(m, tensor({one, idV, one, idV}))};
}

struct CorpusEntry {
    std::string label;
    CrossedData data;
};

// Fully random, unit-normalized random, valid, perturbed-valid and catalog
// entries over F_5 with dimA, dimV <= 3 (catalog entries may be larger).
inline std::vector<CorpusEntry> crossed_corpus(std::uint64_t seed) {
    Gen g(seed);
    const auto f = F5;
    std::vector<CorpusEntry> out;
    for (int i = 0; i < 20; ++i) {
        const auto a = 1 + g.below(3), v = 1 + g.below(3);
        out.push_back({"random", fully_random(g, zn(a, f), v)});
    }
    for (int i = 0; i < 30; ++i) {
        const auto a = 1 + g.below(3), v = 1 + g.below(3);
        out.push_back({"normalized", normalized_random(g, zn(a, f), v)});
    }
    for (const auto &b : valid_bases(f)) {
        out.push_back({"valid", b});
        out.push_back({"perturbed", perturbed(g, b)});
        // A twisted copy: random theta, gamma by the solver.
        for (int tries = 0; tries < 8; ++tries) {
            const auto theta = random_unital_theta(g, b);
            const auto s = solve_gamma(b, theta);
            if (s.kind != GammaSolution::Kind::Unique)
                continue;
            const TwistPair p{theta, s.gamma};
            out.push_back({"twisted", CrossedData{b.A, b.V, twisted_R(b, p), twisted_sigma(b, p)}});
            break;
        }
    }
    for (const auto &c : catalog_crossed(f))
        out.push_back({"catalog", c});
    return out;
}

// A base cross product bialgebra with tensor coalgebra: A = k[Z_n] as a
// bialgebra, C = k[Z_m] as a coalgebra, crossed product from `crossed` (which
// must be on A (x) C).
inline Built<BaseCrossBialgebra> base_from(const CrossedData &crossed, std::size_t m) {
    const auto &f = crossed.A.field;
    const auto A = group_algebra(crossed.A.dim, f).bia;
    return make_base(A, group_algebra(m, f).bia.coa, crossed);
}

// theta(c) = u(c) (x) c for group-like basis elements c, with u(1) = 1 and
// eps(u(c)) = 1; gamma from the pointwise inverses.
inline TwistPair lazy_pair(const CrossedData &d, const std::vector<Vec> &u, const std::vector<Vec> &u_inv) {
    const auto &f = d.A.field;
    const auto a = d.A.dim, v = d.V.dim;
    TwistPair p{LinMap(f, Shape{v}, Shape{a, v}), LinMap(f, Shape{v}, Shape{a, v})};
    for (std::size_t c = 0; c < v; ++c)
        for (std::size_t i = 0; i < a; ++i) {
            p.theta.at(i * v + c, c) = u[c][i];
            p.gamma.at(i * v + c, c) = u_inv[c][i];
        }
    return p;
}

// A random lazy pair on k[Z_n]-based data: u(c) a random unit of k[Z_n] with
// augmentation 1. Returns false if no unit was found.
inline bool random_lazy_pair(Gen &g, const CrossedData &d, TwistPair &out) {
    const auto &f = d.A.field;
    const auto a = d.A.dim, v = d.V.dim;
    std::vector<Vec> u(v), ui(v);
    u[0] = ui[0] = basis_vec(f, a, 0);
    for (std::size_t c = 1; c < v; ++c) {
        bool found = false;
        for (int tries = 0; tries < 32 && !found; ++tries) {
            Vec x(a);
            Scalar sum = f.zero();
            for (std::size_t i = 1; i < a; ++i) {
                x[i] = g.scalar(f);
                sum += x[i];
            }
            x[0] = f.one() - sum;
            // Left multiplication by x; its inverse gives x^-1 from the unit.
            LinMap L(f, Shape{a}, Shape{a});
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t j = 0; j < a; ++j)
                    for (std::size_t k = 0; k < a; ++k)
                        L.at(k, j) += x[i] * d.A.mult(k, i * a + j);
            const auto inv = inverse(L);
            if (!inv)
                continue;
            u[c] = x;
            ui[c] = inv->apply(d.A.unit);
            found = true;
        }
        if (!found)
            return false;
    }
    out = lazy_pair(d, u, ui);
    return true;
}

} // namespace crossbi::testing
