#include <gtest/gtest.h>

#include "support.hpp"

using namespace crossbi;
using namespace crossbi::testing;

namespace {

// k[Z_2] (x) k[Z_2] with R the flip and sigma(c, c') = 1 (x) cc'.
BaseCrossBialgebra tensor_base(const FieldSpec &f) {
    auto b = base_from(tensor_crossed(zn(2, f), 2), 2);
    EXPECT_TRUE(b.report.ok()) << failures(b.report);
    return b.value;
}

BaseCrossBialgebra z4_base(const FieldSpec &f) {
    auto b = base_from(z4_crossed(f), 2);
    EXPECT_TRUE(b.report.ok()) << failures(b.report);
    return b.value;
}

// theta(c) = u(c) (x) c with u(1) = 1, u(g) = 2 - g; u(g)^-1 = (2 + g)/3.
TwistPair lazy_z2(const BaseCrossBialgebra &b) {
    const auto &f = b.A.field();
    const Vec one{f.one(), f.zero()};
    const Vec u{f.from_int(2), -f.one()};
    const Vec ui{f.from_fraction(2, 3), f.from_fraction(1, 3)};
    return lazy_pair(b.crossed, {one, u}, {one, ui});
}

std::vector<BaseCrossBialgebra> random_bases() {
    std::vector<BaseCrossBialgebra> out;
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t v = 1; v <= 3; ++v)
            out.push_back(base_from(tensor_crossed(zn(a, F5), v), v).value);
    out.push_back(z4_base(F5));
    return out;
}

} // namespace

TEST(BialgTwist, LazyInverseIsCorrect) {
    for (const auto &f : {Q, F5}) {
        const auto b = tensor_base(f);
        const auto p = lazy_z2(b);
        EXPECT_TRUE(check_twist_conditions(b.crossed, p).ok());
        const auto s = solve_gamma(b.crossed, p.theta);
        ASSERT_EQ(s.kind, GammaSolution::Kind::Unique);
        EXPECT_EQ(s.gamma, p.gamma);
    }
}

TEST(BialgTwist, IdentityPairGivesBase) {
    for (const auto &b : {tensor_base(Q), z4_base(F5)}) {
        const auto &f = b.A.field();
        const auto p = identity_pair(b.A.alg, b.C.dim);
        EXPECT_TRUE(check_extra_conditions(b, p).ok());
        EXPECT_TRUE(check_cucu_lemmas(b, p).ok());
        const auto r = verify_bialgebra_equivalence(b, p);
        EXPECT_TRUE(r.report.ok()) << failures(r.report);
        EXPECT_EQ(r.value.Wp, w0(f, b.A.dim(), b.C.dim));
        EXPECT_EQ(r.value.rhop, rho0(b.A.coa, b.C));
        EXPECT_EQ(r.value.deltap, b.fused.fused.coa.comult);
        EXPECT_EQ(r.value.witness.phi, LinMap::identity(f, Shape{b.A.dim(), b.C.dim}));
        const auto e = extract_bialgebra_pair(b, b.fused, r.value.witness.phi, r.value.witness.phi_inv);
        EXPECT_TRUE(e.report.ok()) << failures(e.report);
        EXPECT_EQ(e.pair.theta, p.theta);
        EXPECT_EQ(e.pair.gamma, p.gamma);
    }
}

TEST(BialgTwist, LazyTwistFullPass) {
    for (const auto &f : {Q, F5})
        for (const auto &b : {tensor_base(f), z4_base(f)}) {
            const auto p = lazy_z2(b);
            const auto extras = check_extra_conditions(b, p);
            EXPECT_TRUE(extras.ok()) << failures(extras);
            const auto cucu = check_cucu_lemmas(b, p);
            EXPECT_TRUE(cucu.ok()) << failures(cucu);
            EXPECT_EQ(wprime_long(b, p), wprime_short(b, p));
            const auto r = verify_bialgebra_equivalence(b, p);
            EXPECT_TRUE(r.report.ok()) << failures(r.report);
            // For group-like c, W'(a (x) c) = c (x) a u(c) u(c)^-1.
            EXPECT_EQ(r.value.Wp, w0(f, 2, 2));
            EXPECT_NE(r.value.rhop, rho0(b.A.coa, b.C));
            EXPECT_EQ(derive_delta_prime(b, p), r.value.deltap);
            const auto &w = r.value.witness;
            const auto inv2 = tensor(w.phi_inv, w.phi_inv).reshaped(Shape{2, 2, 2, 2}, Shape{2, 2, 2, 2});
            const auto delta = b.fused.fused.coa.comult.reshaped(Shape{2, 2}, Shape{2, 2, 2, 2});
            const auto phi = w.phi.reshaped(Shape{2, 2}, Shape{2, 2});
            const auto conj = compose({inv2, delta, phi});
            EXPECT_EQ(r.value.deltap.reshaped(Shape{2, 2}, Shape{2, 2, 2, 2}), conj);
            const auto e = extract_bialgebra_pair(b, r.value.primed, w.phi, w.phi_inv);
            EXPECT_TRUE(e.report.ok()) << failures(e.report);
            EXPECT_EQ(e.pair.theta, p.theta);
            EXPECT_EQ(e.pair.gamma, p.gamma);
        }
}

TEST(BialgTwist, NonColinearThetaFailsExtra2) {
    const auto b = tensor_base(Q);
    auto p = identity_pair(b.A.alg, 2);
    // theta(g) = 1 (x) g + g (x) 1 - 1 (x) 1.
    p.theta.at(2, 1) += Q.one();
    p.theta.at(0, 1) -= Q.one();
    const auto r = check_extra_conditions(b, p);
    EXPECT_TRUE(r.passed("extra1"));
    EXPECT_FALSE(r.passed("extra2"));
    const auto *e = r.find("extra2");
    ASSERT_NE(e, nullptr);
    ASSERT_FALSE(e->examples.empty());
    EXPECT_EQ(e->examples.front().indices, std::vector<std::size_t>{1});
}

TEST(BialgTwist, ScaledThetaFailsExtra1AndCounitality) {
    const auto b = tensor_base(Q);
    const Vec one{Q.one(), Q.zero()};
    const auto p = lazy_pair(b.crossed, {one, {Q.from_int(2), Q.zero()}}, {one, {Q.from_fraction(1, 2), Q.zero()}});
    EXPECT_TRUE(check_twist_conditions(b.crossed, p).ok());
    const auto r = verify_bialgebra_equivalence(b, p);
    EXPECT_FALSE(r.report.passed("extra1"));
    EXPECT_FALSE(r.report.passed("phi_counital"));
    EXPECT_TRUE(r.report.passed("phi_multiplicative"));
}

TEST(BialgTwist, BadPairIsCaughtByCucu1) {
    const auto b = tensor_base(Q);
    auto p = lazy_z2(b);
    p.gamma.at(2, 1) += Q.one();
    EXPECT_FALSE(check_twist_conditions(b.crossed, p).passed("cros2"));
    EXPECT_FALSE(check_cucu_lemmas(b, p).passed("cucu1"));
}

TEST(BialgTwist, NonStandardBaseIsRejected) {
    auto b = tensor_base(Q);
    b.fused.cocrossed.W.at(0, 0) += Q.one();
    EXPECT_THROW(verify_bialgebra_equivalence(b, identity_pair(b.A.alg, 2)), UnsupportedBase);
}

TEST(BialgTwist, ExtractRejectsNonMorphism) {
    const auto b = tensor_base(Q);
    const auto r = verify_bialgebra_equivalence(b, lazy_z2(b));
    const auto id = LinMap::identity(Q, Shape{2, 2});
    EXPECT_THROW(extract_bialgebra_pair(b, r.value.primed, id, id), NotEquivalence);
}

// The two W' formulas, the Delta' agreements and the converse on random lazy
// pairs over F_5.
TEST(BialgTwist, RandomLazyPairs) {
    Gen g(31);
    const auto bases = random_bases();
    int done = 0;
    while (done < 100) {
        const auto &b = bases[g.below(bases.size())];
        TwistPair p;
        if (!random_lazy_pair(g, b.crossed, p))
            continue;
        ++done;
        ASSERT_TRUE(check_extra_conditions(b, p).ok());
        EXPECT_EQ(wprime_long(b, p), wprime_short(b, p));
        const auto r = verify_bialgebra_equivalence(b, p);
        ASSERT_TRUE(r.report.ok()) << failures(r.report);
        const auto e = extract_bialgebra_pair(b, r.value.primed, r.value.witness.phi, r.value.witness.phi_inv);
        EXPECT_TRUE(e.report.ok()) << failures(e.report);
        EXPECT_EQ(e.pair.theta, p.theta);
        EXPECT_EQ(e.pair.gamma, p.gamma);
    }
}
