#include <gtest/gtest.h>

#include "kroncalc/identities.hpp"
#include "oracles.hpp"

using namespace kroncalc;

TEST(Contingency, SmallCounts) {
    for (int a = 0; a <= 4; ++a) EXPECT_EQ(count_contingency({1, a}), 1);
    EXPECT_EQ(count_contingency({2, 0}), 1);
    EXPECT_EQ(count_contingency({2, 1}), 4);
}

TEST(Contingency, RoutesAgreeWithBruteForce) {
    for (auto [k, a] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}) {
        ContingencySpec s{k, a};
        BigInt brute = oracle::count_contingency(k, a);
        EXPECT_EQ(count_contingency_arrays(s), brute) << k << ',' << a;
        EXPECT_EQ(count_contingency_polynomial(s), brute) << k << ',' << a;
    }
}

TEST(Contingency, FrozenValues) {
    EXPECT_EQ(count_contingency({2, 2}), 12);
    EXPECT_EQ(count_contingency({2, 3}), 28);
    EXPECT_EQ(count_contingency({3, 1}), 36);
    EXPECT_EQ(count_contingency({3, 2}), 1152);
    EXPECT_EQ(count_contingency({3, 3}), 22620);
}

TEST(Contingency, GuardRefusesLargeInstances) {
    EXPECT_THROW(count_contingency({4, 1}), InfeasibleError);
    EXPECT_THROW(count_contingency({2, 5}), InfeasibleError);
    EXPECT_NO_THROW(count_contingency({2, 5}, IdentityLimits::relaxed(6)));
}

TEST(HIdentity, Holds) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (auto [k, a] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}) {
        IdentityResult r = verify_h_identity(eng, {k, a});
        EXPECT_TRUE(r.equal) << k << ',' << a;
        EXPECT_EQ(r.lhs, r.rhs);
    }
    IdentityResult r21 = verify_h_identity(eng, {2, 1});
    EXPECT_EQ(r21.lhs, 4);
    EXPECT_EQ(r21.rhs, 4);
}

TEST(Littlewood, SmallCases) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n = 1; n <= 4; ++n)
        for (auto& r : verify_littlewood_all_splits(eng, {n})) EXPECT_TRUE(r.equal);
    EXPECT_TRUE(verify_littlewood(eng, {2, 1}, 1).equal);
    EXPECT_TRUE(verify_littlewood(eng, {2, 2}, 2).equal);
}

TEST(Littlewood, AllSplitsUpToSix) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : enumerate(n))
            for (const auto& r : verify_littlewood_all_splits(eng, l, 0)) EXPECT_TRUE(r.equal) << l.str();
    EXPECT_THROW(verify_littlewood(eng, {7}, 3), InfeasibleError);
    EXPECT_THROW(verify_littlewood(eng, {2, 1}, 4), InvalidInput);
}

TEST(Cauchy, Holds) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    EXPECT_EQ(verify_cauchy(eng, 1, 2).lhs, 4);
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_cauchy(eng, n, 2).equal) << n;
    EXPECT_TRUE(verify_cauchy(eng, 2, 3).equal);
    EXPECT_TRUE(verify_cauchy(eng, 4, 2).equal);
}

TEST(SchurPolynomial, PowerSumOfOneRow) {
    // s_(n)(x1, x2) has n+1 monomials, each with coefficient 1.
    for (int n = 0; n <= 5; ++n) {
        Polynomial p = schur_polynomial({n}, 2, 2, [](int letter, Exponent& e) { ++e[static_cast<size_t>(letter - 1)]; });
        EXPECT_EQ(static_cast<int>(p.terms().size()), n + 1);
    }
}
