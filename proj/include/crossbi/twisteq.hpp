#pragma once

#include "crossbi/crossed.hpp"

namespace crossbi {

// theta(v) = v<-1> (x) v<0>, gamma(v) = v{-1} (x) v{0}; both [dimV] -> [dimA, dimV].
struct TwistPair {
    LinMap theta;
    LinMap gamma;
};

struct EquivalenceWitness {
    LinMap phi;     // [dimA, dimV] -> [dimA, dimV]
    LinMap phi_inv; // [dimA, dimV] -> [dimA, dimV]
    TwistPair pair;
};

// theta(v) = gamma(v) = 1_A (x) v.
TwistPair identity_pair(const AlgebraData &A, std::size_t dimV);

// R' and sigma' from the pair; the two formulas only.
LinMap twisted_R(const CrossedData &d, const TwistPair &p);
LinMap twisted_sigma(const CrossedData &d, const TwistPair &p);

// cros1..cros4 with sigma' computed first (cros4 refers to it).
CheckReport check_twist_conditions(const CrossedData &d, const TwistPair &p);

// (R', sigma') plus a report with cros1..cros4 followed by the crossed
// product checks of the output (prefixed "primed.").
Built<CrossedData> derive_twisted_data(const CrossedData &d, const TwistPair &p);

// a (x) v -> a v<-1> (x) v<0> for the given map V -> A(x)V.
LinMap module_extension(const AlgebraData &A, const LinMap &theta);

// phi(a (x) v) = a v<-1> (x) v<0> and phi^-1 from gamma; throws NotInvertible
// unless they are mutually inverse.
EquivalenceWitness build_phi(const CrossedData &d, const TwistPair &p);

// phi_multiplicative, phi_unital, phi_left_A_linear, phi_invertible for
// phi: A (x)_{R',sigma'} V -> A (x)_{R,sigma} V.
CheckReport verify_crossed_equivalence(const CrossedData &primed, const CrossedData &base, const LinMap &phi,
                                       const LinMap &phi_inv);
CheckReport verify_crossed_equivalence(const CrossedData &primed, const CrossedData &base,
                                       const EquivalenceWitness &w);

struct ExtractedPair {
    TwistPair pair;
    // cros1..cros4 and Rprim / sigmaprim (the regenerated maps equal the
    // primed ones).
    CheckReport report;
};

// theta(v) = phi(1_A (x) v), gamma(v) = phi^-1(1_A (x) v). Verifies the
// equivalence first and throws NotEquivalence when it fails.
ExtractedPair extract_twisting_pair(const CrossedData &primed, const CrossedData &base, const LinMap &phi,
                                    const LinMap &phi_inv);

struct GammaSolution {
    enum class Kind { Unique, None, Many };
    Kind kind = Kind::None;
    // Unique: the solution. Many: one particular solution.
    LinMap gamma;
    // Whether (cros2) holds for (theta, gamma); false for None.
    bool cros2 = false;
};

// Solves (cros3) for gamma, column by column.
GammaSolution solve_gamma(const CrossedData &d, const LinMap &theta);

// rel1..rel4, theta_multiplicative, theta_unital, gamma_unital for twisted
// tensor products A (x)_R B and A (x)_R' B'.
CheckReport ttp_equivalence(const AlgebraData &A, const AlgebraData &B, const AlgebraData &Bp, const LinMap &R,
                            const LinMap &Rp, const TwistPair &p);

} // namespace crossbi
