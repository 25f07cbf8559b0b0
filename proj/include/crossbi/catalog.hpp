#pragma once

#include "crossbi/bialgeq.hpp"

namespace crossbi {

// k[Z_n] on the basis g^0..g^{n-1}.
HopfData group_algebra(std::size_t n, FieldSpec f);
// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx. Throws BadCharacteristic
// in characteristic 2.
HopfData sweedler_h4(FieldSpec f);

struct QTStructure {
    HopfData H;
    Vec r; // element of H (x) H, shape [dimH, dimH]

    // [] -> [dimH, dimH].
    LinMap element() const;
};

// qt_delta_left, qt_delta_right, qt_quasicocommutative, qt_counit_left,
// qt_counit_right.
CheckReport check_qt(const QTStructure &q);
// r = 1 (x) 1.
QTStructure trivial_qt(const HopfData &H);
// r = (1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g) / 2 on k[Z_2].
QTStructure qt_structure_z2(FieldSpec f);

// D(H) realized on H*cop (x) H.
struct DoubleData {
    HopfData H;
    LinMap antipode_inverse;
    BialgebraData carrier;
    // P(h (x) p) = (h1 -> p <- S^-1 h3) (x) h2, nu(p, p') = pp' (x) 1, 1_W = eps.
    MirrorCrossedData as_mirror;
    // U the flip, eta = eps (x) Delta_H.
    MirrorCoCrossedData as_mirror_co;
};

// Throws AntipodeNotInvertible.
DoubleData drinfeld_double(const HopfData &H);
// double_mirror_product, double_tensor_coalgebra and the bialgebra laws.
CheckReport check_double(const DoubleData &d);

// The biproduct of the braided bialgebra H* (structures induced by r) with H.
struct BiproductData {
    QTStructure qt;
    LinMap action;   // h |> q, [dimH, dimH] -> [dimH]
    LinMap coaction; // q -> r2 (x) (r1 |> q), [dimH] -> [dimH, dimH]
    AlgebraData braided_alg;
    CoalgebraData braided_coa;
    MirrorCrossedData alg;
    MirrorCoCrossedData coa;
    BialgebraData carrier;
};

// Throws AntipodeNotInvertible.
BiproductData radford_biproduct(const QTStructure &q);
// Throws BadCharacteristic.
BiproductData radford_biproduct_z2(FieldSpec f);
// Module and comodule laws of the braided structures, the braided algebra and
// coalgebra laws, and the assembled mirror checks.
CheckReport check_biproduct(const BiproductData &b);

// phi(p (x) h) = p <- S^-1(r1) (x) r2 h, [dimH, dimH] -> [dimH, dimH].
LinMap majid_map(const QTStructure &q);

// phi as a bialgebra isomorphism, right H-module and left H*cop-comodule
// morphism, followed by the mirror extraction and the twisted-equivalence
// checks on the extracted pair.
CheckReport majid_equivalence_demo(const QTStructure &q);
// Uses qt_structure_z2. Throws BadCharacteristic.
CheckReport majid_equivalence_demo(FieldSpec f);

} // namespace crossbi
