#include "crossbi/crossed.hpp"

namespace crossbi {

namespace {

void require_shape(const LinMap &m, const Shape &dom, const Shape &cod, const std::string &what) {
    if (!(m.domain() == dom) || !(m.codomain() == cod))
        throw ShapeMismatch(what + ": expected " + dom.to_string() + "->" + cod.to_string() + ", got " +
                            m.domain().to_string() + "->" + m.codomain().to_string());
}

void require_kind(const PointedSpace &p, PointedSpace::Kind k, const std::string &what) {
    if (p.kind != k)
        throw ShapeMismatch(what + (k == PointedSpace::Kind::Element ? " needs a distinguished element"
                                                                     : " needs a distinguished functional"));
}

} // namespace

void validate(const CrossedData &d) {
    validate(d.A);
    validate(d.V);
    require_kind(d.V, PointedSpace::Kind::Element, "crossed product space V");
    require_same_field(d.A.field, d.V.field, "crossed product");
    const auto a = d.A.dim, v = d.V.dim;
    require_shape(d.R, Shape{v, a}, Shape{a, v}, "crossed product R");
    require_shape(d.sigma, Shape{v, v}, Shape{a, v}, "crossed product sigma");
    require_same_field(d.R.field(), d.A.field, "crossed product R");
    require_same_field(d.sigma.field(), d.A.field, "crossed product sigma");
}

void validate(const TwistingMapData &d) {
    validate(d.A);
    validate(d.B);
    require_same_field(d.A.field, d.B.field, "twisting map");
    require_shape(d.R, Shape{d.B.dim, d.A.dim}, Shape{d.A.dim, d.B.dim}, "twisting map R");
    require_same_field(d.R.field(), d.A.field, "twisting map R");
}

void validate(const CoCrossedData &d) {
    validate(d.X);
    validate(d.C);
    require_kind(d.X, PointedSpace::Kind::Functional, "crossed coproduct space X");
    require_same_field(d.X.field, d.C.field, "crossed coproduct");
    const auto x = d.X.dim, c = d.C.dim;
    require_shape(d.W, Shape{x, c}, Shape{c, x}, "crossed coproduct W");
    require_shape(d.rho, Shape{x, c}, Shape{x, x}, "crossed coproduct rho");
    require_same_field(d.W.field(), d.C.field, "crossed coproduct W");
    require_same_field(d.rho.field(), d.C.field, "crossed coproduct rho");
}

void validate(const MirrorCrossedData &d) {
    validate(d.B);
    validate(d.W);
    require_kind(d.W, PointedSpace::Kind::Element, "mirror crossed product space W");
    require_same_field(d.B.field, d.W.field, "mirror crossed product");
    const auto b = d.B.dim, w = d.W.dim;
    require_shape(d.P, Shape{b, w}, Shape{w, b}, "mirror crossed product P");
    require_shape(d.nu, Shape{w, w}, Shape{w, b}, "mirror crossed product nu");
    require_same_field(d.P.field(), d.B.field, "mirror crossed product P");
    require_same_field(d.nu.field(), d.B.field, "mirror crossed product nu");
}

void validate(const MirrorCoCrossedData &d) {
    validate(d.D);
    validate(d.Y);
    require_kind(d.Y, PointedSpace::Kind::Functional, "mirror crossed coproduct space Y");
    require_same_field(d.D.field, d.Y.field, "mirror crossed coproduct");
    const auto dd = d.D.dim, y = d.Y.dim;
    require_shape(d.U, Shape{dd, y}, Shape{y, dd}, "mirror crossed coproduct U");
    require_shape(d.eta, Shape{dd, y}, Shape{y, y}, "mirror crossed coproduct eta");
    require_same_field(d.U.field(), d.D.field, "mirror crossed coproduct U");
    require_same_field(d.eta.field(), d.D.field, "mirror crossed coproduct eta");
}

LinMap crossed_multiplication(const CrossedData &d) {
    validate(d);
    const auto a = d.A.dim, v = d.V.dim;
    return Flow()
        .then(d.R, 1)
        .then(d.sigma, 2)
        .then(d.A.mult, 1)
        .then(d.A.mult, 0)
        .materialize(d.A.field, Shape{a, v, a, v})
        .reshaped(Shape{a * v, a * v}, Shape{a * v});
}

LinMap twisted_tensor_multiplication(const TwistingMapData &d) {
    validate(d);
    const auto a = d.A.dim, b = d.B.dim;
    return Flow()
        .then(d.R, 1)
        .then(d.A.mult, 0)
        .then(d.B.mult, 1)
        .materialize(d.A.field, Shape{a, b, a, b})
        .reshaped(Shape{a * b, a * b}, Shape{a * b});
}

LinMap crossed_comultiplication(const CoCrossedData &d) {
    validate(d);
    const auto x = d.X.dim, c = d.C.dim;
    return Flow()
        .then(d.C.comult, 1)
        .then(d.rho, 0)
        .then(d.C.comult, 2)
        .then(d.W, 1)
        .materialize(d.C.field, Shape{x, c})
        .reshaped(Shape{x * c}, Shape{x * c, x * c});
}

LinMap mirror_multiplication(const MirrorCrossedData &d) {
    validate(d);
    const auto w = d.W.dim, b = d.B.dim;
    return Flow()
        .then(d.P, 1)
        .then(d.nu, 0)
        .then(d.B.mult, 2)
        .then(d.B.mult, 1)
        .materialize(d.B.field, Shape{w, b, w, b})
        .reshaped(Shape{w * b, w * b}, Shape{w * b});
}

LinMap mirror_comultiplication(const MirrorCoCrossedData &d) {
    validate(d);
    const auto dd = d.D.dim, y = d.Y.dim;
    return Flow()
        .then(d.D.comult, 0)
        .then(d.eta, 1)
        .then(d.D.comult, 0)
        .then(d.U, 1)
        .materialize(d.D.field, Shape{dd, y})
        .reshaped(Shape{dd * y}, Shape{dd * y, dd * y});
}

CheckReport check_crossed_conditions(const CrossedData &d) {
    validate(d);
    const auto &f = d.A.field;
    const auto a = d.A.dim, v = d.V.dim;
    const auto one_a = d.A.unit_map();
    const auto one_v = d.V.as_map();
    const auto &mu = d.A.mult;
    CheckReport rep;
    check_identity(rep, "brz1", f, Shape{a}, Flow().then(one_v, 0).then(d.R, 0), Flow().then(one_v, 1));
    check_identity(rep, "brz1", f, Shape{v}, Flow().then(one_a, 1).then(d.R, 0), Flow().then(one_a, 0));
    check_identity(rep, "brz2", f, Shape{v}, Flow().then(one_v, 0).then(d.sigma, 0), Flow().then(one_a, 0));
    check_identity(rep, "brz2", f, Shape{v}, Flow().then(one_v, 1).then(d.sigma, 0), Flow().then(one_a, 0));
    check_identity(rep, "brz3", f, Shape{v, a, a}, Flow().then(mu, 1).then(d.R, 0),
                   Flow().then(d.R, 0).then(d.R, 1).then(mu, 0));
    check_identity(rep, "brz4", f, Shape{v, v, v},
                   Flow().then(d.sigma, 1).then(d.R, 0).then(d.sigma, 1).then(mu, 0),
                   Flow().then(d.sigma, 0).then(d.sigma, 1).then(mu, 0));
    check_identity(rep, "brz5", f, Shape{v, v, a}, Flow().then(d.R, 1).then(d.R, 0).then(d.sigma, 1).then(mu, 0),
                   Flow().then(d.sigma, 0).then(d.R, 1).then(mu, 0));
    return rep;
}

CheckReport check_cocrossed_conditions(const CoCrossedData &d) {
    validate(d);
    const auto &f = d.C.field;
    const auto x = d.X.dim, c = d.C.dim;
    const auto eps_x = d.X.as_map();
    const auto &eps_c = d.C.counit;
    const auto &dc = d.C.comult;
    const Shape xc{x, c};
    CheckReport rep;
    check_identity(rep, "cobrz1", f, xc, Flow().then(d.W, 0).then(eps_x, 1), Flow().then(eps_x, 0));
    check_identity(rep, "cobrz1", f, xc, Flow().then(d.W, 0).then(eps_c, 0), Flow().then(eps_c, 1));
    check_identity(rep, "cobrz2", f, xc, Flow().then(d.rho, 0).then(eps_x, 1), Flow().then(eps_c, 1));
    check_identity(rep, "cobrz2", f, xc, Flow().then(d.rho, 0).then(eps_x, 0), Flow().then(eps_c, 1));
    check_identity(rep, "cobrz3", f, xc, Flow().then(d.W, 0).then(dc, 0),
                   Flow().then(dc, 1).then(d.W, 0).then(d.W, 1));
    check_identity(rep, "cobrz4", f, xc, Flow().then(dc, 1).then(d.rho, 0).then(d.W, 1).then(d.rho, 0),
                   Flow().then(dc, 1).then(d.rho, 0).then(d.rho, 1));
    check_identity(rep, "cobrz5", f, xc, Flow().then(dc, 1).then(d.rho, 0).then(d.W, 1).then(d.W, 0),
                   Flow().then(dc, 1).then(d.W, 0).then(d.rho, 1));
    return rep;
}

namespace {

// Flows for an algebra on a two-leg carrier [p, q] whose multiplication is
// given on the flat index.
Flow carrier_mult(const LinMap &mult, std::size_t p, std::size_t q) {
    return Flow().then(mult.reshaped(Shape{p, q, p, q}, Shape{p, q}), 0);
}

void brute_force_algebra(CheckReport &rep, const FieldSpec &f, const LinMap &mult, std::size_t p, std::size_t q,
                         const LinMap &one_p, const LinMap &one_q) {
    const Flow m = carrier_mult(mult, p, q);
    check_identity(rep, "assoc", f, Shape{p, q, p, q, p, q}, Flow().then(m).then(m),
                   Flow().then(mult.reshaped(Shape{p, q, p, q}, Shape{p, q}), 2).then(m));
    check_identity(rep, "unit_left", f, Shape{p, q}, Flow().then(one_p, 0).then(one_q, 1).then(m), Flow());
    check_identity(rep, "unit_right", f, Shape{p, q}, Flow().then(one_p, 2).then(one_q, 3).then(m), Flow());
}

Flow carrier_comult(const LinMap &comult, std::size_t p, std::size_t q) {
    return Flow().then(comult.reshaped(Shape{p, q}, Shape{p, q, p, q}), 0);
}

void brute_force_coalgebra(CheckReport &rep, const FieldSpec &f, const LinMap &comult, std::size_t p,
                           std::size_t q, const LinMap &eps_p, const LinMap &eps_q) {
    const auto dm = comult.reshaped(Shape{p, q}, Shape{p, q, p, q});
    check_identity(rep, "coassoc", f, Shape{p, q}, Flow().then(dm, 0).then(dm, 0), Flow().then(dm, 0).then(dm, 2));
    check_identity(rep, "counit_left", f, Shape{p, q}, Flow().then(dm, 0).then(eps_p, 0).then(eps_q, 0), Flow());
    check_identity(rep, "counit_right", f, Shape{p, q}, Flow().then(dm, 0).then(eps_p, 2).then(eps_q, 2), Flow());
}

} // namespace

Built<AlgebraData> build_twisted_tensor(const TwistingMapData &d) {
    validate(d);
    const auto &f = d.A.field;
    const auto a = d.A.dim, b = d.B.dim;
    const auto one_a = d.A.unit_map();
    const auto one_b = d.B.unit_map();
    Built<AlgebraData> out;
    out.value = tensor_algebra(d.A, d.B);
    out.value.mult = twisted_tensor_multiplication(d);
    auto &rep = out.report;
    check_identity(rep, "twist_unit_a", f, Shape{a}, Flow().then(one_b, 0).then(d.R, 0), Flow().then(one_b, 1));
    check_identity(rep, "twist_unit_b", f, Shape{b}, Flow().then(one_a, 1).then(d.R, 0), Flow().then(one_a, 0));
    check_identity(rep, "twist_mult_a", f, Shape{b, a, a}, Flow().then(d.A.mult, 1).then(d.R, 0),
                   Flow().then(d.R, 0).then(d.R, 1).then(d.A.mult, 0));
    check_identity(rep, "twist_mult_b", f, Shape{b, b, a}, Flow().then(d.B.mult, 0).then(d.R, 0),
                   Flow().then(d.R, 1).then(d.R, 0).then(d.B.mult, 1));
    brute_force_algebra(rep, f, out.value.mult, a, b, one_a, one_b);
    return out;
}

Built<AlgebraData> build_crossed_product(const CrossedData &d) {
    validate(d);
    const auto &f = d.A.field;
    const auto a = d.A.dim, v = d.V.dim;
    const auto one_a = d.A.unit_map();
    const auto one_v = d.V.as_map();
    Built<AlgebraData> out;
    out.value.field = f;
    out.value.dim = a * v;
    out.value.mult = crossed_multiplication(d);
    out.value.unit = tensor(one_a, one_v).entries();
    out.report = check_crossed_conditions(d);
    brute_force_algebra(out.report, f, out.value.mult, a, v, one_a, one_v);
    // (a (x) 1_V)(b (x) v) = ab (x) v
    check_identity(out.report, "left_A_property", f, Shape{a, a, v},
                   Flow().then(one_v, 1).then(carrier_mult(out.value.mult, a, v)), Flow().then(d.A.mult, 0));
    return out;
}

Built<CoalgebraData> build_crossed_coproduct(const CoCrossedData &d) {
    validate(d);
    const auto &f = d.C.field;
    const auto x = d.X.dim, c = d.C.dim;
    const auto eps_x = d.X.as_map();
    Built<CoalgebraData> out;
    out.value.field = f;
    out.value.dim = x * c;
    out.value.comult = crossed_comultiplication(d);
    out.value.counit = tensor(eps_x, d.C.counit).reshaped(Shape{x * c}, Shape{});
    out.report = check_cocrossed_conditions(d);
    brute_force_coalgebra(out.report, f, out.value.comult, x, c, eps_x, d.C.counit);
    // (id (x) id (x) eps_X (x) id) Delta = id_X (x) Delta_C
    check_identity(out.report, "defining_property", f, Shape{x, c},
                   Flow().then(carrier_comult(out.value.comult, x, c)).then(eps_x, 2), Flow().then(d.C.comult, 1));
    return out;
}

CrossedData as_crossed(const TwistingMapData &d) {
    validate(d);
    CrossedData out{d.A, unit_point(d.B), d.R, {}};
    out.sigma = tensor(d.A.unit_map(), d.B.mult);
    return out;
}

WRho extract_W_rho(const LinMap &delta, const LinMap &epsX, const LinMap &epsC) {
    if (epsX.codomain().rank() != 0 || epsX.domain().rank() != 1 || epsC.codomain().rank() != 0 ||
        epsC.domain().rank() != 1)
        throw ShapeMismatch("extract_W_rho: counits must be functionals on a single leg");
    const auto x = epsX.domain()[0], c = epsC.domain()[0];
    if (delta.domain().total() != x * c || delta.codomain().total() != x * c * x * c)
        throw ShapeMismatch("extract_W_rho: comultiplication has shape " + delta.domain().to_string() + "->" +
                            delta.codomain().to_string() + ", expected [" + std::to_string(x) + "," +
                            std::to_string(c) + "]->[" + std::to_string(x) + "," + std::to_string(c) + "," +
                            std::to_string(x) + "," + std::to_string(c) + "]");
    const auto dm = delta.reshaped(Shape{x, c}, Shape{x, c, x, c});
    const auto &f = delta.field();
    WRho out;
    out.W = Flow().then(dm, 0).then(epsC, 3).then(epsX, 0).materialize(f, Shape{x, c});
    out.rho = Flow().then(dm, 0).then(epsC, 3).then(epsC, 1).materialize(f, Shape{x, c});
    return out;
}

UEta extract_U_eta(const LinMap &delta, const LinMap &epsD, const LinMap &epsY) {
    if (epsD.codomain().rank() != 0 || epsD.domain().rank() != 1 || epsY.codomain().rank() != 0 ||
        epsY.domain().rank() != 1)
        throw ShapeMismatch("extract_U_eta: counits must be functionals on a single leg");
    const auto dd = epsD.domain()[0], y = epsY.domain()[0];
    if (delta.domain().total() != dd * y || delta.codomain().total() != dd * y * dd * y)
        throw ShapeMismatch("extract_U_eta: comultiplication has the wrong total dimension");
    const auto dm = delta.reshaped(Shape{dd, y}, Shape{dd, y, dd, y});
    const auto &f = delta.field();
    UEta out;
    out.U = Flow().then(dm, 0).then(epsY, 3).then(epsD, 0).materialize(f, Shape{dd, y});
    out.eta = Flow().then(dm, 0).then(epsD, 2).then(epsD, 0).materialize(f, Shape{dd, y});
    return out;
}

Built<CrossBialgebraData> assemble_cross_bialgebra(const CrossedData &cr, const CoCrossedData &co) {
    validate(cr);
    validate(co);
    require_same_field(cr.A.field, co.C.field, "assemble_cross_bialgebra");
    if (cr.A.dim != co.X.dim || cr.V.dim != co.C.dim)
        throw ShapeMismatch("assemble_cross_bialgebra: carriers " + std::to_string(cr.A.dim) + "x" +
                            std::to_string(cr.V.dim) + " and " + std::to_string(co.X.dim) + "x" +
                            std::to_string(co.C.dim) + " differ");
    auto alg = build_crossed_product(cr);
    auto coa = build_crossed_coproduct(co);
    Built<CrossBialgebraData> out;
    out.value = CrossBialgebraData{cr, co, BialgebraData{alg.value, coa.value}};
    out.report.merge(alg.report, "algebra.");
    out.report.merge(coa.report, "coalgebra.");
    out.report.merge(check_bialgebra(out.value.fused), "bialgebra.");
    return out;
}

Built<AlgebraData> build_mirror_crossed(const MirrorCrossedData &d) {
    validate(d);
    const auto &f = d.B.field;
    const auto w = d.W.dim, b = d.B.dim;
    const auto one_w = d.W.as_map();
    const auto one_b = d.B.unit_map();
    Built<AlgebraData> out;
    out.value.field = f;
    out.value.dim = w * b;
    out.value.mult = mirror_multiplication(d);
    out.value.unit = tensor(one_w, one_b).entries();
    brute_force_algebra(out.report, f, out.value.mult, w, b, one_w, one_b);
    // (w (x) b)(1_W (x) b') = w (x) bb'
    check_identity(out.report, "right_B_property", f, Shape{w, b, b},
                   Flow().then(one_w, 2).then(carrier_mult(out.value.mult, w, b)), Flow().then(d.B.mult, 1));
    return out;
}

Built<CoalgebraData> build_mirror_crossed_coproduct(const MirrorCoCrossedData &d) {
    validate(d);
    const auto &f = d.D.field;
    const auto dd = d.D.dim, y = d.Y.dim;
    const auto eps_y = d.Y.as_map();
    Built<CoalgebraData> out;
    out.value.field = f;
    out.value.dim = dd * y;
    out.value.comult = mirror_comultiplication(d);
    out.value.counit = tensor(d.D.counit, eps_y).reshaped(Shape{dd * y}, Shape{});
    brute_force_coalgebra(out.report, f, out.value.comult, dd, y, d.D.counit, eps_y);
    // (id (x) eps_Y (x) id (x) id) Delta = Delta_D (x) id_Y
    check_identity(out.report, "defining_property", f, Shape{dd, y},
                   Flow().then(carrier_comult(out.value.comult, dd, y)).then(eps_y, 1), Flow().then(d.D.comult, 0));
    return out;
}

Built<MirrorCrossBialgebra> assemble_mirror_cross_bialgebra(const MirrorCrossedData &alg,
                                                           const MirrorCoCrossedData &coa) {
    validate(alg);
    validate(coa);
    require_same_field(alg.B.field, coa.D.field, "assemble_mirror_cross_bialgebra");
    if (alg.W.dim != coa.D.dim || alg.B.dim != coa.Y.dim)
        throw ShapeMismatch("assemble_mirror_cross_bialgebra: carriers differ");
    auto a = build_mirror_crossed(alg);
    auto c = build_mirror_crossed_coproduct(coa);
    Built<MirrorCrossBialgebra> out;
    out.value = MirrorCrossBialgebra{alg, coa, BialgebraData{a.value, c.value}};
    out.report.merge(a.report, "algebra.");
    out.report.merge(c.report, "coalgebra.");
    out.report.merge(check_bialgebra(out.value.fused), "bialgebra.");
    return out;
}

Built<CrossBialgebraData> reflect(const MirrorCrossBialgebra &m) {
    return assemble_cross_bialgebra(reflect(m.alg), reflect(m.coa));
}

CrossedData reflect(const MirrorCrossedData &d) {
    validate(d);
    return CrossedData{opposite(d.B), d.W, reflect(d.P), reflect(d.nu)};
}

CoCrossedData reflect(const MirrorCoCrossedData &d) {
    validate(d);
    return CoCrossedData{d.Y, coopposite(d.D), reflect(d.U), reflect(d.eta)};
}

MirrorCrossedData reflect(const CrossedData &d) {
    validate(d);
    return MirrorCrossedData{opposite(d.A), d.V, reflect(d.R), reflect(d.sigma)};
}

MirrorCoCrossedData reflect(const CoCrossedData &d) {
    validate(d);
    return MirrorCoCrossedData{coopposite(d.C), d.X, reflect(d.W), reflect(d.rho)};
}

LinMap w0(FieldSpec f, std::size_t dimA, std::size_t dimC) { return swap(f, dimA, dimC); }

LinMap rho0(const CoalgebraData &A, const CoalgebraData &C) {
    validate(A);
    validate(C);
    return tensor(A.comult, C.counit);
}

CoalgebraData tensor_coalgebra(const CoalgebraData &A, const CoalgebraData &C) {
    validate(A);
    validate(C);
    require_same_field(A.field, C.field, "tensor_coalgebra");
    const auto a = A.dim, c = C.dim;
    CoalgebraData out;
    out.field = A.field;
    out.dim = a * c;
    out.comult = Flow()
                     .then(A.comult, 0)
                     .then(C.comult, 2)
                     .permute({0, 2, 1, 3})
                     .materialize(A.field, Shape{a, c})
                     .reshaped(Shape{a * c}, Shape{a * c, a * c});
    out.counit = tensor(A.counit, C.counit).reshaped(Shape{a * c}, Shape{});
    return out;
}

AlgebraData tensor_algebra(const AlgebraData &A, const AlgebraData &B) {
    validate(A);
    validate(B);
    require_same_field(A.field, B.field, "tensor_algebra");
    const auto a = A.dim, b = B.dim;
    AlgebraData out;
    out.field = A.field;
    out.dim = a * b;
    out.mult = Flow()
                   .permute({0, 2, 1, 3})
                   .then(A.mult, 0)
                   .then(B.mult, 1)
                   .materialize(A.field, Shape{a, b, a, b})
                   .reshaped(Shape{a * b, a * b}, Shape{a * b});
    out.unit = tensor(A.unit_map(), B.unit_map()).entries();
    return out;
}

PointedSpace counit_point(const CoalgebraData &c) {
    validate(c);
    return PointedSpace::functional(c.field, c.counit.entries());
}

PointedSpace unit_point(const AlgebraData &a) {
    validate(a);
    return PointedSpace::element(a.field, a.unit);
}

} // namespace crossbi
