#include "crossbi/algstruct.hpp"

#include "crossbi/solve.hpp"

namespace crossbi {

namespace {

void require_shape(const LinMap &m, const Shape &dom, const Shape &cod, const std::string &what) {
    if (!(m.domain() == dom) || !(m.codomain() == cod))
        throw ShapeMismatch(what + ": expected " + dom.to_string() + "->" + cod.to_string() + ", got " +
                            m.domain().to_string() + "->" + m.codomain().to_string());
}

} // namespace

LinMap AlgebraData::unit_map() const { return LinMap::from_element(field, Shape{dim}, unit); }

LinMap AlgebraData::mu2() const { return compose(mult, tensor(LinMap::identity(field, Shape{dim}), mult)); }

PointedSpace PointedSpace::element(FieldSpec f, Vec v) {
    PointedSpace p{f, v.size(), Kind::Element, std::move(v)};
    return p;
}

PointedSpace PointedSpace::functional(FieldSpec f, Vec v) {
    PointedSpace p{f, v.size(), Kind::Functional, std::move(v)};
    return p;
}

LinMap PointedSpace::as_map() const {
    return kind == Kind::Element ? LinMap::from_element(field, Shape{dim}, point)
                                 : LinMap::from_functional(field, Shape{dim}, point);
}

void validate(const AlgebraData &a) {
    require_shape(a.mult, Shape{a.dim, a.dim}, Shape{a.dim}, "algebra multiplication");
    require_same_field(a.mult.field(), a.field, "algebra");
    if (a.unit.size() != a.dim)
        throw ShapeMismatch("algebra unit has length " + std::to_string(a.unit.size()) + ", expected " +
                            std::to_string(a.dim));
    for (const auto &s : a.unit)
        require_same_field(s.field(), a.field, "algebra unit");
}

void validate(const CoalgebraData &c) {
    require_shape(c.comult, Shape{c.dim}, Shape{c.dim, c.dim}, "comultiplication");
    require_shape(c.counit, Shape{c.dim}, Shape{}, "counit");
    require_same_field(c.comult.field(), c.field, "coalgebra");
    require_same_field(c.counit.field(), c.field, "coalgebra");
}

void validate(const BialgebraData &b) {
    validate(b.alg);
    validate(b.coa);
    require_same_field(b.alg.field, b.coa.field, "bialgebra");
    if (b.alg.dim != b.coa.dim)
        throw ShapeMismatch("bialgebra: algebra and coalgebra dimensions differ");
}

void validate(const PointedSpace &p) {
    if (p.point.size() != p.dim)
        throw ShapeMismatch("pointed space: point has length " + std::to_string(p.point.size()) + ", expected " +
                            std::to_string(p.dim));
    for (const auto &s : p.point)
        require_same_field(s.field(), p.field, "pointed space");
}

CheckReport check_algebra(const AlgebraData &a) {
    validate(a);
    const auto d = a.dim;
    const auto eta = a.unit_map();
    CheckReport rep;
    check_identity(rep, "assoc", a.field, Shape{d, d, d}, Flow().then(a.mult, 0).then(a.mult, 0),
                   Flow().then(a.mult, 1).then(a.mult, 0));
    check_identity(rep, "unit_left", a.field, Shape{d}, Flow().then(eta, 0).then(a.mult, 0), Flow());
    check_identity(rep, "unit_right", a.field, Shape{d}, Flow().then(eta, 1).then(a.mult, 0), Flow());
    return rep;
}

CheckReport check_coalgebra(const CoalgebraData &c) {
    validate(c);
    const auto d = c.dim;
    CheckReport rep;
    check_identity(rep, "coassoc", c.field, Shape{d}, Flow().then(c.comult, 0).then(c.comult, 0),
                   Flow().then(c.comult, 0).then(c.comult, 1));
    check_identity(rep, "counit_left", c.field, Shape{d}, Flow().then(c.comult, 0).then(c.counit, 0), Flow());
    check_identity(rep, "counit_right", c.field, Shape{d}, Flow().then(c.comult, 0).then(c.counit, 1), Flow());
    return rep;
}

CheckReport check_bialgebra(const BialgebraData &b) {
    validate(b);
    const auto d = b.dim();
    const auto &f = b.field();
    const auto &mu = b.alg.mult;
    const auto &delta = b.coa.comult;
    const auto &eps = b.coa.counit;
    const auto eta = b.alg.unit_map();
    CheckReport rep = check_algebra(b.alg);
    rep.merge(check_coalgebra(b.coa));
    check_identity(rep, "comult_multiplicative", f, Shape{d, d}, Flow().then(mu, 0).then(delta, 0),
                   Flow().then(delta, 0).then(delta, 2).permute({0, 2, 1, 3}).then(mu, 0).then(mu, 1));
    check_identity(rep, "comult_unital", f, Shape{}, Flow().then(eta, 0).then(delta, 0),
                   Flow().then(eta, 0).then(eta, 1));
    check_identity(rep, "counit_multiplicative", f, Shape{d, d}, Flow().then(mu, 0).then(eps, 0),
                   Flow().then(eps, 0).then(eps, 0));
    check_identity(rep, "counit_unital", f, Shape{}, Flow().then(eta, 0).then(eps, 0), Flow());
    return rep;
}

HopfCheck check_hopf(const HopfData &h) {
    validate(h.bia);
    const auto d = h.dim();
    require_shape(h.antipode, Shape{d}, Shape{d}, "antipode");
    require_same_field(h.antipode.field(), h.field(), "antipode");
    const auto &f = h.field();
    const auto &mu = h.bia.alg.mult;
    const auto &delta = h.bia.coa.comult;
    const auto &eps = h.bia.coa.counit;
    const auto eta = h.bia.alg.unit_map();
    HopfCheck out;
    out.report = check_bialgebra(h.bia);
    const Flow unit_counit = Flow().then(eps, 0).then(eta, 0);
    check_identity(out.report, "antipode_left", f, Shape{d},
                   Flow().then(delta, 0).then(h.antipode, 0).then(mu, 0), unit_counit);
    check_identity(out.report, "antipode_right", f, Shape{d},
                   Flow().then(delta, 0).then(h.antipode, 1).then(mu, 0), unit_counit);
    out.antipode_inverse = inverse(h.antipode);
    return out;
}

BialgebraData dualize(const BialgebraData &b) {
    validate(b);
    const auto d = b.dim();
    const auto &f = b.field();
    BialgebraData out;
    out.alg.field = out.coa.field = f;
    out.alg.dim = out.coa.dim = d;
    out.alg.mult = b.coa.comult.transpose();
    out.alg.unit = b.coa.counit.entries();
    out.coa.comult = b.alg.mult.transpose();
    out.coa.counit = LinMap::from_functional(f, Shape{d}, b.alg.unit);
    return out;
}

RegularActions regular_actions(const AlgebraData &h) {
    validate(h);
    const auto d = h.dim;
    RegularActions out{LinMap(h.field, Shape{d, d}, Shape{d}), LinMap(h.field, Shape{d, d}, Shape{d})};
    // Coefficient of the dual basis functional e^k in (e_i -> e^j) is
    // e^j(e_k e_i); in (e^j <- e_i) it is e^j(e_i e_k).
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                out.left.at(k, i * d + j) = h.mult(j, k * d + i);
                out.right.at(k, j * d + i) = h.mult(j, i * d + k);
            }
    return out;
}

AlgebraData opposite(const AlgebraData &a) {
    validate(a);
    AlgebraData out = a;
    out.mult = compose(a.mult, swap(a.field, a.dim, a.dim));
    return out;
}

CoalgebraData coopposite(const CoalgebraData &c) {
    validate(c);
    CoalgebraData out = c;
    out.comult = compose(swap(c.field, c.dim, c.dim), c.comult);
    return out;
}

BialgebraData op_cop(const BialgebraData &b, bool flip_mult, bool flip_comult) {
    BialgebraData out = b;
    if (flip_mult)
        out.alg = opposite(b.alg);
    if (flip_comult)
        out.coa = coopposite(b.coa);
    return out;
}

} // namespace crossbi
