#include "crossbi/bialgeq.hpp"

namespace crossbi {

namespace {

bool same_algebra(const AlgebraData &x, const AlgebraData &y) {
    return x.field == y.field && x.dim == y.dim && x.mult == y.mult && x.unit == y.unit;
}

void check_pair_shapes(const BaseCrossBialgebra &base, const TwistPair &p) {
    const Shape c{base.C.dim}, ac{base.A.dim(), base.C.dim};
    for (const auto *m : {&p.theta, &p.gamma})
        if (!(m->domain() == c) || !(m->codomain() == ac))
            throw ShapeMismatch("twist pair map has shape " + m->domain().to_string() + "->" +
                                m->codomain().to_string() + ", expected " + c.to_string() + "->" + ac.to_string());
}

// Delta of the carrier A (x) C with its legs split, [A,C] -> [A,C,A,C].
LinMap split_comult(const CoalgebraData &carrier, std::size_t a, std::size_t c) {
    return carrier.comult.reshaped(Shape{a, c}, Shape{a, c, a, c});
}

bool extras_hold(const CheckReport &rep) {
    for (const char *n : {"extra1", "extra2", "extra3", "cros1", "cros2", "cros3", "cros4"})
        if (!rep.passed(n))
            return false;
    return true;
}

LinMap conjugated_delta(const BaseCrossBialgebra &base, const LinMap &phi, const LinMap &phi_inv) {
    const auto a = base.A.dim(), c = base.C.dim;
    return Flow()
        .then(phi, 0)
        .then(split_comult(base.fused.fused.coa, a, c), 0)
        .then(phi_inv, 0)
        .then(phi_inv, 2)
        .materialize(base.A.field(), Shape{a, c})
        .reshaped(Shape{a * c}, Shape{a * c, a * c});
}

CoCrossedData primed_cocrossed(const BaseCrossBialgebra &base, const WRho &wr) {
    return CoCrossedData{counit_point(base.A.coa), base.C, wr.W, wr.rho};
}

} // namespace

Built<BaseCrossBialgebra> make_base(const BialgebraData &A, const CoalgebraData &C, const CrossedData &crossed) {
    validate(A);
    validate(C);
    validate(crossed);
    if (!same_algebra(A.alg, crossed.A))
        throw ShapeMismatch("make_base: crossed product algebra differs from the bialgebra A");
    if (crossed.V.dim != C.dim)
        throw ShapeMismatch("make_base: crossed product space and coalgebra C have different dimensions");
    const CoCrossedData co{counit_point(A.coa), C, w0(A.field(), A.dim(), C.dim), rho0(A.coa, C)};
    auto assembled = assemble_cross_bialgebra(crossed, co);
    Built<BaseCrossBialgebra> out;
    out.value = BaseCrossBialgebra{A, C, crossed, assembled.value};
    out.report = std::move(assembled.report);
    return out;
}

void require_standard_base(const BaseCrossBialgebra &base) {
    validate(base.A);
    validate(base.C);
    validate(base.crossed);
    const auto &co = base.fused.cocrossed;
    validate(co);
    if (!same_algebra(base.A.alg, base.crossed.A) || base.crossed.V.dim != base.C.dim)
        throw UnsupportedBase("base: crossed product is not built on the bialgebra A and the coalgebra C");
    if (!(co.W == w0(base.A.field(), base.A.dim(), base.C.dim)))
        throw UnsupportedBase("base: W is not the flip W0");
    if (!(co.rho == rho0(base.A.coa, base.C)))
        throw UnsupportedBase("base: rho is not rho0(a (x) c) = a1 (x) a2 eps(c)");
    if (!(co.X.point == base.A.coa.counit.entries()))
        throw UnsupportedBase("base: eps_X is not the counit of A");
}

CheckReport check_extra_conditions(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    const auto &f = base.A.field();
    const auto c = base.C.dim;
    const auto &eps_a = base.A.coa.counit;
    const auto &eps_c = base.C.counit;
    const auto &dc = base.C.comult;
    CheckReport rep;
    for (const auto *m : {&p.theta, &p.gamma})
        check_identity(rep, "extra1", f, Shape{c}, Flow().then(*m, 0).then(eps_a, 0).then(eps_c, 0),
                       Flow().then(eps_c, 0));
    check_identity(rep, "extra2", f, Shape{c}, Flow().then(p.theta, 0).then(dc, 1),
                   Flow().then(dc, 0).then(p.theta, 0));
    check_identity(rep, "extra3", f, Shape{c}, Flow().then(p.gamma, 0).then(dc, 1),
                   Flow().then(dc, 0).then(p.gamma, 0));
    rep.merge(check_twist_conditions(base.crossed, p));
    return rep;
}

CheckReport check_cucu_lemmas(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    const auto &f = base.A.field();
    const auto c = base.C.dim;
    const auto &mu = base.A.alg.mult;
    const auto one_a = base.A.alg.unit_map();
    const auto &eps_a = base.A.coa.counit;
    const auto &eps_c = base.C.counit;
    const auto &dc = base.C.comult;
    const Shape s{c};
    CheckReport rep;
    check_identity(rep, "cucu1", f, s, Flow().then(dc, 0).then(p.theta, 0).then(eps_c, 1).then(p.gamma, 1).then(mu, 0),
                   Flow().then(one_a, 0));
    check_identity(rep, "cucu2", f, s, Flow().then(dc, 0).then(p.gamma, 0).then(eps_c, 1).then(p.theta, 1).then(mu, 0),
                   Flow().then(one_a, 0));
    check_identity(rep, "cucu3", f, s, Flow().then(p.theta, 0).then(eps_a, 0), Flow());
    check_identity(rep, "cucu4", f, s, Flow().then(p.gamma, 0).then(eps_a, 0), Flow());
    check_identity(rep, "cucu5", f, s,
                   Flow().then(dc, 0).then(p.gamma, 0).then(eps_c, 1).then(p.gamma, 1).then(eps_c, 2),
                   Flow().then(p.gamma, 0).then(p.gamma, 1).then(eps_c, 2));
    check_identity(rep, "cucu6", f, s,
                   Flow().then(dc, 0).then(p.theta, 0).then(eps_c, 1).then(p.theta, 1).then(eps_c, 2),
                   Flow().then(p.theta, 0).then(p.theta, 1).then(eps_c, 2));
    return rep;
}

LinMap wprime_long(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    const auto &mu = base.A.alg.mult;
    // a (x) c -> [a, c<-1>, m1, m2] with m = c<0>; then gamma on both m legs.
    return Flow()
        .then(p.theta, 1)
        .then(base.C.comult, 2)
        .then(p.gamma, 2)
        .then(base.A.coa.counit, 2)
        .then(p.gamma, 3)
        .then(base.C.counit, 4)
        .permute({2, 0, 1, 3})
        .then(mu, 2)
        .then(mu, 1)
        .materialize(base.A.field(), Shape{base.A.dim(), base.C.dim});
}

LinMap wprime_short(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    const auto &mu = base.A.alg.mult;
    return Flow()
        .then(p.theta, 1)
        .then(base.C.comult, 2)
        .then(p.gamma, 3)
        .then(base.C.counit, 4)
        .permute({2, 0, 1, 3})
        .then(mu, 2)
        .then(mu, 1)
        .materialize(base.A.field(), Shape{base.A.dim(), base.C.dim});
}

LinMap rhoprime(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    const auto &mu = base.A.alg.mult;
    const auto &da = base.A.coa.comult;
    // [a1, a2, k1, k2, m{-1}, n{-1}] with k = c<-1>, m = c<0>, n = m{0}.
    return Flow()
        .then(da, 0)
        .then(p.theta, 2)
        .then(da, 2)
        .then(p.gamma, 4)
        .then(p.gamma, 5)
        .then(base.C.counit, 6)
        .permute({0, 2, 4, 1, 3, 5})
        .then(mu, 1)
        .then(mu, 0)
        .then(mu, 2)
        .then(mu, 1)
        .materialize(base.A.field(), Shape{base.A.dim(), base.C.dim});
}

LinMap deltaprime_formula(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    const auto a = base.A.dim(), c = base.C.dim;
    const auto &mu = base.A.alg.mult;
    const auto &da = base.A.coa.comult;
    // [a1, a2, k1, k2, m{-1}, m{0}, u{-1}, u{0}] with k = c1<-1>, m = c1<0>, u = c2.
    return Flow()
        .then(da, 0)
        .then(base.C.comult, 2)
        .then(p.theta, 2)
        .then(da, 2)
        .then(p.gamma, 4)
        .then(p.gamma, 6)
        .permute({0, 2, 4, 5, 1, 3, 6, 7})
        .then(mu, 1)
        .then(mu, 0)
        .then(mu, 3)
        .then(mu, 2)
        .materialize(base.A.field(), Shape{a, c})
        .reshaped(Shape{a * c}, Shape{a * c, a * c});
}

WRho derive_coalgebra_twist(const BaseCrossBialgebra &base, const TwistPair &p) {
    const LinMap wl = wprime_long(base, p);
    const LinMap ws = wprime_short(base, p);
    if (!(wl == ws))
        throw InternalInconsistency("derive_coalgebra_twist: the two formulas for W' disagree");
    return WRho{wl, rhoprime(base, p)};
}

LinMap derive_delta_prime(const BaseCrossBialgebra &base, const TwistPair &p) {
    const LinMap dp = deltaprime_formula(base, p);
    const WRho wr = derive_coalgebra_twist(base, p);
    if (!(dp == crossed_comultiplication(primed_cocrossed(base, wr))))
        throw InternalInconsistency("derive_delta_prime: closed formula differs from the crossed coproduct of (W', rho')");
    const auto phi = module_extension(base.A.alg, p.theta);
    const auto phi_inv = module_extension(base.A.alg, p.gamma);
    if (!(dp == conjugated_delta(base, phi, phi_inv)))
        throw InternalInconsistency("derive_delta_prime: closed formula differs from the conjugated comultiplication");
    return dp;
}

CheckReport check_bialgebra_equivalence(const BaseCrossBialgebra &base, const CrossBialgebraData &primed,
                                        const LinMap &phi, const LinMap &phi_inv) {
    require_standard_base(base);
    const auto &f = base.A.field();
    const auto a = base.A.dim(), c = base.C.dim;
    validate(primed.fused);
    if (primed.fused.dim() != a * c)
        throw ShapeMismatch("primed cross product bialgebra has the wrong dimension");
    CheckReport rep = verify_crossed_equivalence(primed.crossed, base.crossed, phi, phi_inv);
    const auto &eps_a = base.A.coa.counit;
    const auto &eps_c = base.C.counit;
    const auto &dc = base.C.comult;
    check_identity(rep, "phi_comultiplicative", f, Shape{a, c},
                   Flow().then(split_comult(primed.fused.coa, a, c), 0).then(phi, 0).then(phi, 2),
                   Flow().then(phi, 0).then(split_comult(base.fused.fused.coa, a, c), 0));
    check_identity(rep, "phi_counital", f, Shape{a, c}, Flow().then(phi, 0).then(eps_a, 0).then(eps_c, 0),
                   Flow().then(eps_a, 0).then(eps_c, 0));
    check_identity(rep, "phi_right_C_colinear", f, Shape{a, c}, Flow().then(dc, 1).then(phi, 0),
                   Flow().then(phi, 0).then(dc, 1));
    check_identity(rep, "phi_inv_right_C_colinear", f, Shape{a, c}, Flow().then(dc, 1).then(phi_inv, 0),
                   Flow().then(phi_inv, 0).then(dc, 1));
    return rep;
}

Built<BialgTwistResult> verify_bialgebra_equivalence(const BaseCrossBialgebra &base, const TwistPair &p) {
    require_standard_base(base);
    check_pair_shapes(base, p);
    Built<BialgTwistResult> out;
    auto &rep = out.report;
    auto &res = out.value;
    rep = check_extra_conditions(base, p);
    const bool hypotheses = extras_hold(rep);
    rep.merge(check_cucu_lemmas(base, p));

    const LinMap wl = wprime_long(base, p);
    const LinMap ws = wprime_short(base, p);
    compare_maps(rep, "Wprimnou", ws, wl);
    if (hypotheses && !(wl == ws))
        throw InternalInconsistency("verify_bialgebra_equivalence: the two formulas for W' disagree");
    res.Wp = wl;
    res.rhop = rhoprime(base, p);
    res.deltap = deltaprime_formula(base, p);

    const CoCrossedData co = primed_cocrossed(base, WRho{res.Wp, res.rhop});
    const CrossedData cr{base.crossed.A, base.crossed.V, twisted_R(base.crossed, p), twisted_sigma(base.crossed, p)};
    const LinMap formco = crossed_comultiplication(co);
    res.witness = EquivalenceWitness{module_extension(base.A.alg, p.theta), module_extension(base.A.alg, p.gamma), p};
    const LinMap conj = conjugated_delta(base, res.witness.phi, res.witness.phi_inv);
    compare_maps(rep, "deltaprim", res.deltap, formco);
    compare_maps(rep, "deltaprim_conjugation", res.deltap, conj);
    if (hypotheses && (!(res.deltap == formco) || !(res.deltap == conj)))
        throw InternalInconsistency("verify_bialgebra_equivalence: the three forms of Delta' disagree");

    auto assembled = assemble_cross_bialgebra(cr, co);
    res.primed = assembled.value;
    rep.merge(assembled.report, "primed.");
    rep.merge(check_bialgebra_equivalence(base, res.primed, res.witness.phi, res.witness.phi_inv));
    return out;
}

ExtractedPair extract_bialgebra_pair(const BaseCrossBialgebra &base, const CrossBialgebraData &primed,
                                     const LinMap &phi, const LinMap &phi_inv) {
    const CheckReport pre = check_bialgebra_equivalence(base, primed, phi, phi_inv);
    if (!pre.ok()) {
        std::string names;
        for (const auto &n : pre.failed_names())
            names += (names.empty() ? "" : ", ") + n;
        throw NotEquivalence("extract_bialgebra_pair: phi is not an equivalence (" + names + ")");
    }
    const auto &f = base.A.field();
    const auto embed = tensor(base.A.alg.unit_map(), LinMap::identity(f, Shape{base.C.dim}));
    ExtractedPair out;
    out.pair = TwistPair{compose(phi, embed), compose(phi_inv, embed)};
    out.report = check_extra_conditions(base, out.pair);
    compare_maps(out.report, "Rprim", twisted_R(base.crossed, out.pair), primed.crossed.R);
    compare_maps(out.report, "sigmaprim", twisted_sigma(base.crossed, out.pair), primed.crossed.sigma);
    const WRho extracted = extract_W_rho(primed.fused.coa.comult, base.A.coa.counit, base.C.counit);
    compare_maps(out.report, "Wprim", wprime_long(base, out.pair), extracted.W);
    compare_maps(out.report, "rhoprim", rhoprime(base, out.pair), extracted.rho);
    return out;
}

} // namespace crossbi
