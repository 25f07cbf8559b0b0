#include "crossbi/twisteq.hpp"

#include "crossbi/solve.hpp"

namespace crossbi {

namespace {

void validate_pair(const CrossedData &d, const TwistPair &p) {
    validate(d);
    const Shape v{d.V.dim}, av{d.A.dim, d.V.dim};
    for (const auto *m : {&p.theta, &p.gamma}) {
        if (!(m->domain() == v) || !(m->codomain() == av))
            throw ShapeMismatch("twist pair map has shape " + m->domain().to_string() + "->" +
                                m->codomain().to_string() + ", expected " + v.to_string() + "->" + av.to_string());
        require_same_field(m->field(), d.A.field, "twist pair");
    }
}

} // namespace

TwistPair identity_pair(const AlgebraData &A, std::size_t dimV) {
    validate(A);
    const auto m = tensor(A.unit_map(), LinMap::identity(A.field, Shape{dimV}));
    return TwistPair{m, m};
}

LinMap twisted_R(const CrossedData &d, const TwistPair &p) {
    validate_pair(d, p);
    return Flow()
        .then(p.theta, 0)
        .then(d.R, 1)
        .then(p.gamma, 2)
        .then(d.A.mult, 1)
        .then(d.A.mult, 0)
        .materialize(d.A.field, Shape{d.V.dim, d.A.dim});
}

LinMap twisted_sigma(const CrossedData &d, const TwistPair &p) {
    validate_pair(d, p);
    return Flow()
        .then(p.theta, 1)
        .then(p.theta, 0)
        .then(d.R, 1)
        .then(d.sigma, 2)
        .then(d.A.mult, 1)
        .then(d.A.mult, 0)
        .then(p.gamma, 1)
        .then(d.A.mult, 0)
        .materialize(d.A.field, Shape{d.V.dim, d.V.dim});
}

CheckReport check_twist_conditions(const CrossedData &d, const TwistPair &p) {
    validate_pair(d, p);
    const auto &f = d.A.field;
    const auto &mu = d.A.mult;
    const auto v = d.V.dim;
    const auto one_av = tensor(d.A.unit_map(), d.V.as_map());
    const auto one_a = d.A.unit_map();
    const LinMap sigma_p = twisted_sigma(d, p);
    CheckReport rep;
    compare_maps(rep, "cros1", compose(p.theta, d.V.as_map()), one_av);
    compare_maps(rep, "cros1", compose(p.gamma, d.V.as_map()), one_av);
    check_identity(rep, "cros2", f, Shape{v}, Flow().then(p.theta, 0).then(p.gamma, 1).then(mu, 0),
                   Flow().then(one_a, 0));
    check_identity(rep, "cros3", f, Shape{v}, Flow().then(p.gamma, 0).then(p.theta, 1).then(mu, 0),
                   Flow().then(one_a, 0));
    check_identity(rep, "cros4", f, Shape{v, v},
                   Flow().then(p.gamma, 1).then(d.R, 0).then(p.gamma, 1).then(sigma_p, 2).then(mu, 0).then(mu, 0),
                   Flow().then(d.sigma, 0).then(p.gamma, 1).then(mu, 0));
    return rep;
}

Built<CrossedData> derive_twisted_data(const CrossedData &d, const TwistPair &p) {
    Built<CrossedData> out;
    out.report = check_twist_conditions(d, p);
    out.value = CrossedData{d.A, d.V, twisted_R(d, p), twisted_sigma(d, p)};
    out.report.merge(build_crossed_product(out.value).report, "primed.");
    return out;
}

LinMap module_extension(const AlgebraData &A, const LinMap &theta) {
    validate(A);
    if (theta.domain().rank() != 1 || theta.codomain().rank() != 2 || theta.codomain()[0] != A.dim)
        throw ShapeMismatch("module_extension: map must be [V] -> [A,V]");
    const auto v = theta.domain()[0];
    return Flow().then(theta, 1).then(A.mult, 0).materialize(A.field, Shape{A.dim, v});
}

EquivalenceWitness build_phi(const CrossedData &d, const TwistPair &p) {
    validate_pair(d, p);
    EquivalenceWitness w{module_extension(d.A, p.theta), module_extension(d.A, p.gamma), p};
    const auto id = LinMap::identity(d.A.field, Shape{d.A.dim, d.V.dim});
    if (!(compose(w.phi, w.phi_inv) == id) || !(compose(w.phi_inv, w.phi) == id))
        throw NotInvertible("build_phi: the maps built from theta and gamma are not mutually inverse");
    return w;
}

CheckReport verify_crossed_equivalence(const CrossedData &primed, const CrossedData &base, const LinMap &phi,
                                       const LinMap &phi_inv) {
    validate(primed);
    validate(base);
    if (primed.A.dim != base.A.dim || primed.V.dim != base.V.dim)
        throw ShapeMismatch("verify_crossed_equivalence: carriers differ");
    const auto &f = base.A.field;
    const auto a = base.A.dim, v = base.V.dim;
    const Shape av{a, v};
    for (const auto *m : {&phi, &phi_inv})
        if (!(m->domain() == av) || !(m->codomain() == av))
            throw ShapeMismatch("verify_crossed_equivalence: phi must be " + av.to_string() + "->" + av.to_string());
    const auto mult_p = crossed_multiplication(primed).reshaped(Shape{a, v, a, v}, av);
    const auto mult_b = crossed_multiplication(base).reshaped(Shape{a, v, a, v}, av);
    const auto one_a = base.A.unit_map();
    const auto one_v = base.V.as_map();
    CheckReport rep;
    check_identity(rep, "phi_multiplicative", f, Shape{a, v, a, v}, Flow().then(mult_p, 0).then(phi, 0),
                   Flow().then(phi, 2).then(phi, 0).then(mult_b, 0));
    check_identity(rep, "phi_unital", f, Shape{}, Flow().then(one_a, 0).then(one_v, 1).then(phi, 0),
                   Flow().then(one_a, 0).then(one_v, 1));
    check_identity(rep, "phi_left_A_linear", f, Shape{a}, Flow().then(one_v, 1).then(phi, 0),
                   Flow().then(one_v, 1));
    check_identity(rep, "phi_left_A_linear", f, Shape{a, a, v}, Flow().then(base.A.mult, 0).then(phi, 0),
                   Flow().then(phi, 1).then(base.A.mult, 0));
    const auto id = LinMap::identity(f, av);
    compare_maps(rep, "phi_invertible", compose(phi, phi_inv), id);
    compare_maps(rep, "phi_invertible", compose(phi_inv, phi), id);
    return rep;
}

CheckReport verify_crossed_equivalence(const CrossedData &primed, const CrossedData &base,
                                       const EquivalenceWitness &w) {
    return verify_crossed_equivalence(primed, base, w.phi, w.phi_inv);
}

ExtractedPair extract_twisting_pair(const CrossedData &primed, const CrossedData &base, const LinMap &phi,
                                    const LinMap &phi_inv) {
    const CheckReport pre = verify_crossed_equivalence(primed, base, phi, phi_inv);
    if (!pre.ok()) {
        std::string names;
        for (const auto &n : pre.failed_names())
            names += (names.empty() ? "" : ", ") + n;
        throw NotEquivalence("extract_twisting_pair: phi is not an equivalence (" + names + ")");
    }
    const auto embed = tensor(base.A.unit_map(), LinMap::identity(base.A.field, Shape{base.V.dim}));
    ExtractedPair out;
    out.pair = TwistPair{compose(phi, embed), compose(phi_inv, embed)};
    out.report = check_twist_conditions(base, out.pair);
    compare_maps(out.report, "Rprim", twisted_R(base, out.pair), primed.R);
    compare_maps(out.report, "sigmaprim", twisted_sigma(base, out.pair), primed.sigma);
    return out;
}

GammaSolution solve_gamma(const CrossedData &d, const LinMap &theta) {
    validate(d);
    const auto a = d.A.dim, v = d.V.dim;
    const auto &f = d.A.field;
    const LinMap phi = module_extension(d.A, theta);
    const LinMap target = tensor(d.A.unit_map(), LinMap::identity(f, Shape{v}));
    GammaSolution out;
    out.kind = GammaSolution::Kind::Unique;
    out.gamma = LinMap(f, Shape{v}, Shape{a, v});
    for (std::size_t c = 0; c < v; ++c) {
        const Vec rhs = target.column(c);
        const SolveResult s = solve_linear(phi, rhs);
        if (s.kind == SolveResult::Kind::None) {
            out.kind = GammaSolution::Kind::None;
            out.gamma = LinMap();
            return out;
        }
        if (s.kind == SolveResult::Kind::Many)
            out.kind = GammaSolution::Kind::Many;
        for (std::size_t r = 0; r < a * v; ++r)
            out.gamma.at(r, c) = s.particular[r];
    }
    CheckReport rep;
    check_identity(rep, "cros2", f, Shape{v}, Flow().then(theta, 0).then(out.gamma, 1).then(d.A.mult, 0),
                   Flow().then(d.A.unit_map(), 0));
    out.cros2 = rep.ok();
    return out;
}

CheckReport ttp_equivalence(const AlgebraData &A, const AlgebraData &B, const AlgebraData &Bp, const LinMap &R,
                            const LinMap &Rp, const TwistPair &p) {
    const TwistingMapData base{A, B, R}, primed{A, Bp, Rp};
    validate(base);
    validate(primed);
    if (B.dim != Bp.dim || !(B.unit == Bp.unit))
        throw ShapeMismatch("ttp_equivalence: B and B' must share the space and the unit");
    const CrossedData as_cr = as_crossed(base);
    validate_pair(as_cr, p);
    const auto &f = A.field;
    const auto a = A.dim, b = B.dim;
    const auto &mu = A.mult;
    const auto one_a = A.unit_map();
    const auto one_b = B.unit_map();
    const auto mult = twisted_tensor_multiplication(base).reshaped(Shape{a, b, a, b}, Shape{a, b});
    CheckReport rep;
    check_identity(rep, "theta_multiplicative", f, Shape{b, b}, Flow().then(Bp.mult, 0).then(p.theta, 0),
                   Flow().then(p.theta, 1).then(p.theta, 0).then(mult, 0));
    check_identity(rep, "theta_unital", f, Shape{}, Flow().then(one_b, 0).then(p.theta, 0),
                   Flow().then(one_a, 0).then(one_b, 1));
    check_identity(rep, "gamma_unital", f, Shape{}, Flow().then(one_b, 0).then(p.gamma, 0),
                   Flow().then(one_a, 0).then(one_b, 1));
    check_identity(rep, "rel1", f, Shape{b, b}, Flow().then(B.mult, 0).then(p.gamma, 0),
                   Flow().then(p.gamma, 1).then(R, 0).then(p.gamma, 1).then(mu, 0).then(Bp.mult, 1));
    check_identity(rep, "rel2", f, Shape{b}, Flow().then(p.theta, 0).then(p.gamma, 1).then(mu, 0),
                   Flow().then(one_a, 0));
    check_identity(rep, "rel3", f, Shape{b}, Flow().then(p.gamma, 0).then(p.theta, 1).then(mu, 0),
                   Flow().then(one_a, 0));
    compare_maps(rep, "rel4", Rp, twisted_R(as_cr, p));
    return rep;
}

} // namespace crossbi
