#include "crossbi/catalog.hpp"

#include "crossbi/solve.hpp"

namespace crossbi {

namespace {

void require_odd_characteristic(const FieldSpec &f, const char *what) {
    if (f.characteristic() == 2)
        throw BadCharacteristic(std::string(what) + ": characteristic 2 is not allowed");
}

struct Term {
    std::size_t index;
    long num;
    long den = 1;
};

// Multiplication table: entry (a, b) lists the terms of e_a e_b.
LinMap mult_from_table(FieldSpec f, std::size_t d, const std::vector<std::vector<std::vector<Term>>> &table) {
    LinMap m(f, Shape{d, d}, Shape{d});
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (const auto &t : table[a][b])
                m.at(t.index, a * d + b) += f.from_fraction(t.num, t.den);
    return m;
}

// Product in H^(x)k of two elements of shape [d,...,d].
Tensor leg_product(const Tensor &x, const Tensor &y, const LinMap &mu) {
    const auto k = x.shape().rank();
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < k; ++i) {
        perm.push_back(i);
        perm.push_back(k + i);
    }
    Tensor t = x.otimes(y).permute(perm);
    for (std::size_t i = 0; i < k; ++i)
        t = t.apply(mu, i);
    return t;
}

LinMap require_antipode_inverse(const HopfData &H, const char *what) {
    auto hc = check_hopf(H);
    if (!hc.antipode_inverse)
        throw AntipodeNotInvertible(std::string(what) + ": the antipode is not invertible");
    return *hc.antipode_inverse;
}

} // namespace

HopfData group_algebra(std::size_t n, FieldSpec f) {
    if (n == 0)
        throw ShapeMismatch("group_algebra: n must be positive");
    HopfData h;
    auto &alg = h.bia.alg;
    auto &coa = h.bia.coa;
    alg.field = coa.field = f;
    alg.dim = coa.dim = n;
    alg.mult = LinMap(f, Shape{n, n}, Shape{n});
    coa.comult = LinMap(f, Shape{n}, Shape{n, n});
    coa.counit = LinMap(f, Shape{n}, Shape{});
    h.antipode = LinMap(f, Shape{n}, Shape{n});
    alg.unit.assign(n, f.zero());
    alg.unit[0] = f.one();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            alg.mult.at((i + j) % n, i * n + j) = f.one();
        coa.comult.at(i * n + i, i) = f.one();
        coa.counit.at(0, i) = f.one();
        h.antipode.at((n - i) % n, i) = f.one();
    }
    return h;
}

HopfData sweedler_h4(FieldSpec f) {
    require_odd_characteristic(f, "sweedler_h4");
    constexpr std::size_t one = 0, g = 1, x = 2, gx = 3, d = 4;
    const std::vector<std::vector<std::vector<Term>>> table{
        {{{one, 1}}, {{g, 1}}, {{x, 1}}, {{gx, 1}}},
        {{{g, 1}}, {{one, 1}}, {{gx, 1}}, {{x, 1}}},
        {{{x, 1}}, {{gx, -1}}, {}, {}},
        {{{gx, 1}}, {{x, -1}}, {}, {}},
    };
    HopfData h;
    auto &alg = h.bia.alg;
    auto &coa = h.bia.coa;
    alg.field = coa.field = f;
    alg.dim = coa.dim = d;
    alg.mult = mult_from_table(f, d, table);
    alg.unit = {f.one(), f.zero(), f.zero(), f.zero()};
    coa.comult = LinMap(f, Shape{d}, Shape{d, d});
    coa.comult.at(one * d + one, one) = f.one();
    coa.comult.at(g * d + g, g) = f.one();
    coa.comult.at(x * d + one, x) = f.one();
    coa.comult.at(g * d + x, x) = f.one();
    coa.comult.at(gx * d + g, gx) = f.one();
    coa.comult.at(one * d + gx, gx) = f.one();
    coa.counit = LinMap::from_functional(f, Shape{d}, Vec{f.one(), f.one(), f.zero(), f.zero()});
    h.antipode = LinMap(f, Shape{d}, Shape{d});
    h.antipode.at(one, one) = f.one();
    h.antipode.at(g, g) = f.one();
    h.antipode.at(gx, x) = -f.one();
    h.antipode.at(x, gx) = f.one();
    return h;
}

LinMap QTStructure::element() const { return LinMap::from_element(H.field(), Shape{H.dim(), H.dim()}, r); }

CheckReport check_qt(const QTStructure &q) {
    validate(q.H.bia);
    const auto d = q.H.dim();
    const auto &f = q.H.field();
    if (q.r.size() != d * d)
        throw ShapeMismatch("check_qt: r must have " + std::to_string(d * d) + " coefficients");
    const auto &mu = q.H.bia.alg.mult;
    const auto &delta = q.H.bia.coa.comult;
    const auto &eps = q.H.bia.coa.counit;
    const auto one = q.H.bia.alg.unit_map();
    const auto rm = q.element();
    const auto cop = compose(swap(f, d, d), delta);
    const Tensor unit = Tensor::basis(f, Shape{}, 0);
    const Tensor r = unit.apply(rm, 0);
    const Tensor r12 = r.apply(one, 2);
    const Tensor r13 = r.apply(one, 1);
    const Tensor r23 = r.apply(one, 0);
    CheckReport rep;
    check_identity(rep, "qt_delta_left", f, Shape{}, Flow().then(rm, 0).then(delta, 0),
                   [&](const Tensor &) { return leg_product(r13, r23, mu); });
    check_identity(rep, "qt_delta_right", f, Shape{}, Flow().then(rm, 0).then(delta, 1),
                   [&](const Tensor &) { return leg_product(r13, r12, mu); });
    check_identity(
        rep, "qt_quasicocommutative", f, Shape{d},
        [&](const Tensor &h) { return leg_product(r, h.apply(delta, 0), mu); },
        [&](const Tensor &h) { return leg_product(h.apply(cop, 0), r, mu); });
    check_identity(rep, "qt_counit_left", f, Shape{}, Flow().then(rm, 0).then(eps, 0), Flow().then(one, 0));
    check_identity(rep, "qt_counit_right", f, Shape{}, Flow().then(rm, 0).then(eps, 1), Flow().then(one, 0));
    return rep;
}

QTStructure trivial_qt(const HopfData &H) {
    validate(H.bia);
    return QTStructure{H, tensor(H.bia.alg.unit_map(), H.bia.alg.unit_map()).entries()};
}

QTStructure qt_structure_z2(FieldSpec f) {
    require_odd_characteristic(f, "qt_structure_z2");
    QTStructure q{group_algebra(2, f), {}};
    const auto half = f.from_fraction(1, 2);
    // Index i * 2 + j for g^i (x) g^j.
    q.r = {half, half, half, -half};
    return q;
}

DoubleData drinfeld_double(const HopfData &H) {
    validate(H.bia);
    const auto d = H.dim();
    const auto &f = H.field();
    DoubleData out;
    out.H = H;
    out.antipode_inverse = require_antipode_inverse(H, "drinfeld_double");
    const auto &sinv = out.antipode_inverse;
    const auto dual = dualize(H.bia);
    const auto act = regular_actions(H.bia.alg);
    const auto &delta = H.bia.coa.comult;
    // (p (x) h)(p' (x) h') = p (h1 -> p' <- S^-1 h3) (x) h2 h'
    const LinMap mult = Flow()
                            .then(delta, 1)
                            .then(delta, 2)
                            .permute({0, 1, 4, 3, 2, 5})
                            .then(sinv, 3)
                            .then(act.right, 2)
                            .then(act.left, 1)
                            .then(dual.alg.mult, 0)
                            .then(H.bia.alg.mult, 1)
                            .materialize(f, Shape{d, d, d, d})
                            .reshaped(Shape{d * d, d * d}, Shape{d * d});
    out.carrier.alg.field = f;
    out.carrier.alg.dim = d * d;
    out.carrier.alg.mult = mult;
    out.carrier.alg.unit = tensor(dual.alg.unit_map(), H.bia.alg.unit_map()).entries();
    const auto pcop = coopposite(dual.coa);
    out.carrier.coa = tensor_coalgebra(pcop, H.bia.coa);

    const auto w = PointedSpace::element(f, dual.alg.unit);
    const LinMap P = Flow()
                         .then(delta, 0)
                         .then(delta, 1)
                         .permute({0, 3, 2, 1})
                         .then(sinv, 2)
                         .then(act.right, 1)
                         .then(act.left, 0)
                         .materialize(f, Shape{d, d});
    const LinMap nu = tensor(dual.alg.mult, H.bia.alg.unit_map());
    out.as_mirror = MirrorCrossedData{H.bia.alg, w, P, nu};
    out.as_mirror_co = MirrorCoCrossedData{pcop, counit_point(H.bia.coa), swap(f, d, d),
                                           tensor(pcop.counit, delta)};
    return out;
}

CheckReport check_double(const DoubleData &d) {
    CheckReport rep;
    compare_maps(rep, "double_mirror_product", d.carrier.alg.mult, mirror_multiplication(d.as_mirror));
    compare_maps(rep, "double_mirror_coproduct", d.carrier.coa.comult, mirror_comultiplication(d.as_mirror_co));
    const auto dual = dualize(d.H.bia);
    const auto tc = tensor_coalgebra(coopposite(dual.coa), d.H.bia.coa);
    compare_maps(rep, "double_tensor_coalgebra", d.carrier.coa.comult, tc.comult);
    compare_maps(rep, "double_tensor_coalgebra", d.carrier.coa.counit, tc.counit);
    rep.merge(check_bialgebra(d.carrier));
    return rep;
}

BiproductData radford_biproduct(const QTStructure &q) {
    validate(q.H.bia);
    const auto d = q.H.dim();
    const auto &f = q.H.field();
    if (q.r.size() != d * d)
        throw ShapeMismatch("radford_biproduct: r must have " + std::to_string(d * d) + " coefficients");
    const auto sinv = require_antipode_inverse(q.H, "radford_biproduct");
    const auto dual = dualize(q.H.bia);
    const auto act = regular_actions(q.H.bia.alg);
    const auto &delta = q.H.bia.coa.comult;
    const auto rm = q.element();
    BiproductData out;
    out.qt = q;
    // h |> q = h1 -> q <- S^-1 h2
    out.action = Flow()
                     .then(delta, 0)
                     .permute({0, 2, 1})
                     .then(sinv, 2)
                     .then(act.right, 1)
                     .then(act.left, 0)
                     .materialize(f, Shape{d, d});
    out.coaction = Flow().then(rm, 0).permute({1, 0, 2}).then(out.action, 1).materialize(f, Shape{d});
    // p . q = (p <- S^-1 r1) * (r2 |> q)
    out.braided_alg.field = f;
    out.braided_alg.dim = d;
    out.braided_alg.mult = Flow()
                               .then(rm, 0)
                               .permute({2, 0, 1, 3})
                               .then(sinv, 1)
                               .then(act.right, 0)
                               .then(out.action, 1)
                               .then(dual.alg.mult, 0)
                               .materialize(f, Shape{d, d});
    out.braided_alg.unit = dual.alg.unit;
    out.braided_coa = coopposite(dual.coa);

    const auto w = PointedSpace::element(f, dual.alg.unit);
    // P(h (x) b) = (h1 |> b) (x) h2
    const LinMap P =
        Flow().then(delta, 0).permute({0, 2, 1}).then(out.action, 0).materialize(f, Shape{d, d});
    const LinMap nu = tensor(out.braided_alg.mult, q.H.bia.alg.unit_map());
    out.alg = MirrorCrossedData{q.H.bia.alg, w, P, nu};
    // U(b (x) h) = b(-1) h (x) b(0)
    const LinMap U =
        Flow().then(out.coaction, 0).permute({0, 2, 1}).then(q.H.bia.alg.mult, 0).materialize(f, Shape{d, d});
    out.coa = MirrorCoCrossedData{out.braided_coa, counit_point(q.H.bia.coa), U,
                                  tensor(out.braided_coa.counit, delta)};
    out.carrier = BialgebraData{build_mirror_crossed(out.alg).value, build_mirror_crossed_coproduct(out.coa).value};
    return out;
}

BiproductData radford_biproduct_z2(FieldSpec f) { return radford_biproduct(qt_structure_z2(f)); }

CheckReport check_biproduct(const BiproductData &b) {
    const auto d = b.qt.H.dim();
    const auto &f = b.qt.H.field();
    const auto &mu = b.qt.H.bia.alg.mult;
    const auto &delta = b.qt.H.bia.coa.comult;
    const auto one = b.qt.H.bia.alg.unit_map();
    const auto &eps = b.qt.H.bia.coa.counit;
    CheckReport rep;
    check_identity(rep, "action_unit", f, Shape{d}, Flow().then(one, 0).then(b.action, 0), Flow());
    check_identity(rep, "action_assoc", f, Shape{d, d, d}, Flow().then(mu, 0).then(b.action, 0),
                   Flow().then(b.action, 1).then(b.action, 0));
    check_identity(rep, "coaction_counit", f, Shape{d}, Flow().then(b.coaction, 0).then(eps, 0), Flow());
    check_identity(rep, "coaction_coassoc", f, Shape{d}, Flow().then(b.coaction, 0).then(delta, 0),
                   Flow().then(b.coaction, 0).then(b.coaction, 1));
    rep.merge(check_algebra(b.braided_alg), "braided.");
    rep.merge(check_coalgebra(b.braided_coa), "braided.");
    rep.merge(assemble_mirror_cross_bialgebra(b.alg, b.coa).report);
    return rep;
}

LinMap majid_map(const QTStructure &q) {
    validate(q.H.bia);
    const auto d = q.H.dim();
    const auto sinv = require_antipode_inverse(q.H, "majid_map");
    const auto act = regular_actions(q.H.bia.alg);
    return Flow()
        .then(q.element(), 0)
        .permute({2, 0, 1, 3})
        .then(sinv, 1)
        .then(act.right, 0)
        .then(q.H.bia.alg.mult, 1)
        .materialize(q.H.field(), Shape{d, d});
}

CheckReport majid_equivalence_demo(const QTStructure &q) {
    CheckReport rep;
    rep.merge(check_qt(q), "qt.");
    const auto &H = q.H;
    const auto d = H.dim();
    const auto &f = H.field();
    const auto dd = Shape{d, d};
    const DoubleData D = drinfeld_double(H);
    const BiproductData Rb = radford_biproduct(q);
    rep.merge(check_double(D), "double.");
    rep.merge(check_biproduct(Rb), "biproduct.");

    const LinMap phi = majid_map(q);
    const auto phi_inv_opt = inverse(phi);
    rep.record("phi_invertible", phi_inv_opt.has_value(), "phi has no inverse");
    if (!phi_inv_opt)
        return rep;
    const LinMap &phi_inv = *phi_inv_opt;
    const auto id = LinMap::identity(f, dd);
    compare_maps(rep, "phi_invertible", compose(phi, phi_inv), id);
    compare_maps(rep, "phi_invertible", compose(phi_inv, phi), id);

    // phi: biproduct -> D(H), both on P (x) H.
    const auto mult_b = Rb.carrier.alg.mult.reshaped(Shape{d, d, d, d}, dd);
    const auto mult_d = D.carrier.alg.mult.reshaped(Shape{d, d, d, d}, dd);
    const auto comult_b = Rb.carrier.coa.comult.reshaped(dd, Shape{d, d, d, d});
    const auto comult_d = D.carrier.coa.comult.reshaped(dd, Shape{d, d, d, d});
    const auto unit_b = LinMap::from_element(f, dd, Rb.carrier.alg.unit);
    const auto unit_d = LinMap::from_element(f, dd, D.carrier.alg.unit);
    const auto counit_b = Rb.carrier.coa.counit.reshaped(dd, Shape{});
    const auto counit_d = D.carrier.coa.counit.reshaped(dd, Shape{});
    check_identity(rep, "phi_multiplicative", f, Shape{d, d, d, d}, Flow().then(mult_b, 0).then(phi, 0),
                   Flow().then(phi, 2).then(phi, 0).then(mult_d, 0));
    check_identity(rep, "phi_unital", f, Shape{}, Flow().then(unit_b, 0).then(phi, 0), Flow().then(unit_d, 0));
    check_identity(rep, "phi_comultiplicative", f, dd, Flow().then(comult_b, 0).then(phi, 0).then(phi, 2),
                   Flow().then(phi, 0).then(comult_d, 0));
    check_identity(rep, "phi_counital", f, dd, Flow().then(phi, 0).then(counit_d, 0), Flow().then(counit_b, 0));
    const auto eps_p = LinMap::from_element(f, Shape{d}, dualize(H.bia).alg.unit);
    check_identity(rep, "phi_fixes_H", f, Shape{d}, Flow().then(eps_p, 0).then(phi, 0), Flow().then(eps_p, 0));
    check_identity(rep, "phi_right_H_linear", f, Shape{d, d, d}, Flow().then(H.bia.alg.mult, 1).then(phi, 0),
                   Flow().then(phi, 0).then(H.bia.alg.mult, 1));
    const auto &dp = Rb.braided_coa.comult;
    check_identity(rep, "phi_left_comodule", f, dd, Flow().then(dp, 0).then(phi, 1),
                   Flow().then(phi, 0).then(dp, 0));

    // The mirror analogue of the converse, carried out on the reflection: the
    // base is D(H) with the bialgebra H^op,cop and the coalgebra H*.
    auto base = make_base(op_cop(H.bia, true, true), dualize(H.bia).coa, reflect(D.as_mirror));
    rep.merge(base.report, "mirror.base.");
    compare_maps(rep, "mirror.base_matches_double", base.value.fused.fused.alg.mult,
                 reflect(mult_d).reshaped(Shape{d * d, d * d}, Shape{d * d}));
    compare_maps(rep, "mirror.base_matches_double", base.value.fused.fused.coa.comult,
                 reflect(comult_d).reshaped(Shape{d * d}, Shape{d * d, d * d}));
    auto primed = assemble_cross_bialgebra(reflect(Rb.alg), reflect(Rb.coa));
    rep.merge(primed.report, "mirror.primed.");
    const LinMap rphi = reflect(phi), rphi_inv = reflect(phi_inv);
    try {
        const ExtractedPair ex = extract_bialgebra_pair(base.value, primed.value, rphi, rphi_inv);
        rep.merge(ex.report, "mirror.");
        const auto twisted = verify_bialgebra_equivalence(base.value, ex.pair);
        rep.merge(twisted.report, "mirror.twisted.");
        compare_maps(rep, "mirror.regenerated", twisted.value.primed.fused.alg.mult, primed.value.fused.alg.mult);
        compare_maps(rep, "mirror.regenerated", twisted.value.primed.fused.coa.comult,
                     primed.value.fused.coa.comult);
    } catch (const NotEquivalence &e) {
        rep.record("mirror.extraction", false, e.what());
    }
    return rep;
}

CheckReport majid_equivalence_demo(FieldSpec f) { return majid_equivalence_demo(qt_structure_z2(f)); }

} // namespace crossbi
