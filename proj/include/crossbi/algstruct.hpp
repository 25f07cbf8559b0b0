#pragma once

#include <optional>

#include "crossbi/linmap.hpp"
#include "crossbi/report.hpp"

namespace crossbi {

struct AlgebraData {
    FieldSpec field;
    std::size_t dim = 0;
    LinMap mult; // [dim,dim] -> [dim]
    Vec unit;    // the element 1

    // The map k -> A sending 1 to the unit.
    LinMap unit_map() const;
    // mu o (id (x) mu), [dim,dim,dim] -> [dim].
    LinMap mu2() const;
};

struct CoalgebraData {
    FieldSpec field;
    std::size_t dim = 0;
    LinMap comult; // [dim] -> [dim,dim]
    LinMap counit; // [dim] -> []
};

struct BialgebraData {
    AlgebraData alg;
    CoalgebraData coa;

    const FieldSpec &field() const { return alg.field; }
    std::size_t dim() const { return alg.dim; }
};

struct HopfData {
    BialgebraData bia;
    LinMap antipode;

    const FieldSpec &field() const { return bia.field(); }
    std::size_t dim() const { return bia.dim(); }
};

// A vector space with a distinguished element (1_V) or functional (eps_X).
struct PointedSpace {
    enum class Kind { Element, Functional };

    FieldSpec field;
    std::size_t dim = 0;
    Kind kind = Kind::Element;
    Vec point;

    static PointedSpace element(FieldSpec f, Vec v);
    static PointedSpace functional(FieldSpec f, Vec v);
    // [] -> [dim] for elements, [dim] -> [] for functionals.
    LinMap as_map() const;
};

// Validates dimensions and fields of the structure maps; throws ShapeMismatch
// or FieldMismatch. The check_* functions call these first.
void validate(const AlgebraData &a);
void validate(const CoalgebraData &c);
void validate(const BialgebraData &b);
void validate(const PointedSpace &p);

// assoc, unit_left, unit_right on every basis tuple.
CheckReport check_algebra(const AlgebraData &a);
// coassoc, counit_left, counit_right on every basis element.
CheckReport check_coalgebra(const CoalgebraData &c);
// Algebra and coalgebra laws plus comult_multiplicative, comult_unital,
// counit_multiplicative, counit_unital.
CheckReport check_bialgebra(const BialgebraData &b);

struct HopfCheck {
    CheckReport report;
    // Set when the antipode is bijective.
    std::optional<LinMap> antipode_inverse;
};

// Bialgebra laws plus antipode_left (S(c1)c2 = eps(c)1) and antipode_right.
HopfCheck check_hopf(const HopfData &h);

// The dual bialgebra on the dual basis.
BialgebraData dualize(const BialgebraData &b);

struct RegularActions {
    LinMap left;  // h -> p : [dimH, dimH] -> [dimH], (h -> p)(x) = p(x h)
    LinMap right; // p <- h : [dimH, dimH] -> [dimH], (p <- h)(x) = p(h x)
};
RegularActions regular_actions(const AlgebraData &h);

// Opposite multiplication and/or co-opposite comultiplication.
BialgebraData op_cop(const BialgebraData &b, bool flip_mult, bool flip_comult);
AlgebraData opposite(const AlgebraData &a);
CoalgebraData coopposite(const CoalgebraData &c);

} // namespace crossbi
