#pragma once

#include "crossbi/algstruct.hpp"

namespace crossbi {

// (A, V, R, sigma) with R: V(x)A -> A(x)V and sigma: V(x)V -> A(x)V.
struct CrossedData {
    AlgebraData A;
    PointedSpace V; // element variant, 1_V
    LinMap R;
    LinMap sigma;
};

// R: B(x)A -> A(x)B.
struct TwistingMapData {
    AlgebraData A;
    AlgebraData B;
    LinMap R;
};

// (X, C, W, rho) with W: X(x)C -> C(x)X and rho: X(x)C -> X(x)X.
struct CoCrossedData {
    PointedSpace X; // functional variant, eps_X
    CoalgebraData C;
    LinMap W;
    LinMap rho;
};

// A crossed product and a crossed coproduct on the same carrier A(x)C, plus
// the fused bialgebra structure they define.
struct CrossBialgebraData {
    CrossedData crossed;
    CoCrossedData cocrossed;
    BialgebraData fused;
};

// Multiplication on W(x)B from P: B(x)W -> W(x)B and nu: W(x)W -> W(x)B.
struct MirrorCrossedData {
    AlgebraData B;
    PointedSpace W; // element variant, 1_W
    LinMap P;
    LinMap nu;
};

// Comultiplication on D(x)Y from U: D(x)Y -> Y(x)D and eta: D(x)Y -> Y(x)Y.
struct MirrorCoCrossedData {
    CoalgebraData D;
    PointedSpace Y; // functional variant, eps_Y
    LinMap U;
    LinMap eta;
};

// Mirror product and mirror coproduct on the same carrier D(x)B, with D the
// space W of the product and B the space Y of the coproduct.
struct MirrorCrossBialgebra {
    MirrorCrossedData alg;
    MirrorCoCrossedData coa;
    BialgebraData fused;
};

template <class T> struct Built {
    T value;
    CheckReport report;
};

void validate(const CrossedData &d);
void validate(const TwistingMapData &d);
void validate(const CoCrossedData &d);
void validate(const MirrorCrossedData &d);
void validate(const MirrorCoCrossedData &d);

// The product formulas alone, without checks.
LinMap crossed_multiplication(const CrossedData &d);
LinMap twisted_tensor_multiplication(const TwistingMapData &d);
LinMap crossed_comultiplication(const CoCrossedData &d);
LinMap mirror_multiplication(const MirrorCrossedData &d);
LinMap mirror_comultiplication(const MirrorCoCrossedData &d);

// brz1..brz5 only.
CheckReport check_crossed_conditions(const CrossedData &d);
// cobrz1..cobrz5 only.
CheckReport check_cocrossed_conditions(const CoCrossedData &d);

// Twisting-map conditions plus assoc/unit of the result.
Built<AlgebraData> build_twisted_tensor(const TwistingMapData &d);
// brz1..brz5 plus assoc, unit_left, unit_right and left_A_property of the
// result, each computed independently.
Built<AlgebraData> build_crossed_product(const CrossedData &d);
// cobrz1..cobrz5 plus coassoc, counit laws and defining_property.
Built<CoalgebraData> build_crossed_coproduct(const CoCrossedData &d);

// sigma(b, b') = 1_A (x) bb'.
CrossedData as_crossed(const TwistingMapData &d);

struct WRho {
    LinMap W;
    LinMap rho;
};
// W = (eps_X (x) id (x) id (x) eps_C) Delta, rho = (id (x) eps_C (x) id (x) eps_C) Delta.
WRho extract_W_rho(const LinMap &delta, const LinMap &epsX, const LinMap &epsC);

Built<CrossBialgebraData> assemble_cross_bialgebra(const CrossedData &cr, const CoCrossedData &co);

// Brute force only: assoc, unit laws, right_B_property.
Built<AlgebraData> build_mirror_crossed(const MirrorCrossedData &d);
// Brute force only: coassoc, counit laws, defining_property.
Built<CoalgebraData> build_mirror_crossed_coproduct(const MirrorCoCrossedData &d);

struct UEta {
    LinMap U;
    LinMap eta;
};
// U = (eps_D (x) id (x) id (x) eps_Y) Delta, eta = (eps_D (x) id (x) eps_D (x) id) Delta.
UEta extract_U_eta(const LinMap &delta, const LinMap &epsD, const LinMap &epsY);

Built<MirrorCrossBialgebra> assemble_mirror_cross_bialgebra(const MirrorCrossedData &alg,
                                                           const MirrorCoCrossedData &coa);

// Reverses every leg. The mirror product on W(x)B becomes the crossed
// product of (B^op, W, reflect(P), reflect(nu)); the mirror coproduct on
// D(x)Y becomes the crossed coproduct of (Y, D^cop, reflect(U), reflect(eta)).
CrossedData reflect(const MirrorCrossedData &d);
CoCrossedData reflect(const MirrorCoCrossedData &d);
MirrorCrossedData reflect(const CrossedData &d);
MirrorCoCrossedData reflect(const CoCrossedData &d);
// The reflected pair assembled on B(x)D.
Built<CrossBialgebraData> reflect(const MirrorCrossBialgebra &m);

// W0(a (x) c) = c (x) a.
LinMap w0(FieldSpec f, std::size_t dimA, std::size_t dimC);
// rho0(a (x) c) = a1 (x) a2 eps_C(c).
LinMap rho0(const CoalgebraData &A, const CoalgebraData &C);
// Tensor product coalgebra on A(x)C.
CoalgebraData tensor_coalgebra(const CoalgebraData &A, const CoalgebraData &C);
// Tensor product algebra on A(x)B.
AlgebraData tensor_algebra(const AlgebraData &A, const AlgebraData &B);
// The functional eps_A as a pointed space (functional variant).
PointedSpace counit_point(const CoalgebraData &c);
// The unit of an algebra as a pointed space (element variant).
PointedSpace unit_point(const AlgebraData &a);

} // namespace crossbi
