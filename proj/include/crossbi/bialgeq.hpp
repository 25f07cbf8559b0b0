#pragma once

#include "crossbi/twisteq.hpp"

namespace crossbi {

// A cross product bialgebra whose coalgebra side is (W0, rho0), i.e. the
// tensor product coalgebra of a bialgebra A and a coalgebra C.
struct BaseCrossBialgebra {
    BialgebraData A;
    CoalgebraData C;
    CrossedData crossed; // on A (x) C, with crossed.V the pointed space C
    CrossBialgebraData fused;
};

// Builds the base with W0 and rho0 and returns the assembled bialgebra report.
Built<BaseCrossBialgebra> make_base(const BialgebraData &A, const CoalgebraData &C, const CrossedData &crossed);
// Throws UnsupportedBase unless the coalgebra side is exactly (W0, rho0) and
// the pieces are consistent.
void require_standard_base(const BaseCrossBialgebra &base);

// extra1..extra3 on every basis element of C, followed by cros1..cros4.
CheckReport check_extra_conditions(const BaseCrossBialgebra &base, const TwistPair &p);
// cucu1..cucu6 on every basis element of C.
CheckReport check_cucu_lemmas(const BaseCrossBialgebra &base, const TwistPair &p);

// The W' formula with the eps_A(c<0>1{-1}) factor, and the shorter one.
LinMap wprime_long(const BaseCrossBialgebra &base, const TwistPair &p);
LinMap wprime_short(const BaseCrossBialgebra &base, const TwistPair &p);
LinMap rhoprime(const BaseCrossBialgebra &base, const TwistPair &p);
// The closed formula for Delta', [dimA*dimC] -> [dimA*dimC, dimA*dimC].
LinMap deltaprime_formula(const BaseCrossBialgebra &base, const TwistPair &p);

// W' by both formulas (throws InternalInconsistency if they differ) and rho'.
WRho derive_coalgebra_twist(const BaseCrossBialgebra &base, const TwistPair &p);
// Delta' by the closed formula; throws InternalInconsistency unless it equals
// the crossed coproduct of (W', rho') and (phi^-1 (x) phi^-1) Delta phi.
LinMap derive_delta_prime(const BaseCrossBialgebra &base, const TwistPair &p);

struct BialgTwistResult {
    LinMap Wp;
    LinMap rhop;
    LinMap deltap;
    CrossBialgebraData primed;
    EquivalenceWitness witness;
};

// Morphism checks for phi: primed -> base. Names phi_multiplicative,
// phi_unital, phi_left_A_linear, phi_invertible, phi_comultiplicative,
// phi_counital, phi_right_C_colinear, phi_inv_right_C_colinear.
CheckReport check_bialgebra_equivalence(const BaseCrossBialgebra &base, const CrossBialgebraData &primed,
                                        const LinMap &phi, const LinMap &phi_inv);

// The forward direction with every sub-check recorded.
Built<BialgTwistResult> verify_bialgebra_equivalence(const BaseCrossBialgebra &base, const TwistPair &p);

// The converse: theta(c) = phi(1 (x) c), gamma(c) = phi^-1(1 (x) c), with the
// conditions and the regenerated W', rho', R', sigma' compared to primed.
// Throws NotEquivalence when phi fails the morphism checks.
ExtractedPair extract_bialgebra_pair(const BaseCrossBialgebra &base, const CrossBialgebraData &primed,
                                     const LinMap &phi, const LinMap &phi_inv);

} // namespace crossbi
