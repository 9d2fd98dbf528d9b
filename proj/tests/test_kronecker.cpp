#include <gtest/gtest.h>

#include <array>

#include "kroncalc/kronecker.hpp"
#include "oracles.hpp"

using namespace kroncalc;

namespace {

Partition hook(int m) {
    std::vector<int> p{m + 1};
    for (int i = 0; i < m; ++i) p.push_back(1);
    return Partition(p);
}

}  // namespace

TEST(Kronecker, Examples) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    EXPECT_EQ(eng.kron({2, 1}, {2, 1}, {2, 1}), 1);
    for (int m = 0; m <= 4; ++m) EXPECT_EQ(eng.kron(hook(m), hook(m), hook(m)), 1) << m;
    for (int n = 1; n <= 8; ++n)
        for (const auto& l : enumerate(n))
            for (const auto& v : enumerate(n)) ASSERT_EQ(eng.kron(l, {n}, v), l == v ? 1 : 0);
    EXPECT_THROW(eng.kron({2, 1}, {2}, {3}), InvalidInput);
}

TEST(Kronecker, MatchesPermutationAverage) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n = 1; n <= 5; ++n) {
        oracle::Characters chi(n);
        auto ps = enumerate(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps) ASSERT_EQ(eng.kron(a, b, c), oracle::kron_by_permutations(chi, a, b, c));
    }
}

TEST(Kronecker, FastPathMatchesBigIntPath) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n : {6, 9, 12}) {
        auto ps = enumerate(n);
        for (size_t i = 0; i < ps.size(); i += 3)
            for (size_t j = i; j < ps.size(); j += 5)
                EXPECT_EQ(eng.class_sum(ps[i], ps[j], ps.back()), eng.class_sum_bigint(ps[i], ps[j], ps.back()));
    }
}

TEST(Kronecker, SymmetryAndConjugation) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n = 1; n <= 6; ++n) {
        auto ps = enumerate(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                for (const auto& c : ps) {
                    BigInt g = eng.class_sum(a, b, c);
                    ASSERT_GE(g, 0);
                    ASSERT_EQ(g, eng.class_sum(b, a, c));
                    ASSERT_EQ(g, eng.class_sum(c, b, a));
                    ASSERT_EQ(g, eng.class_sum(conjugate(a), conjugate(b), c));
                    ASSERT_EQ(g, eng.class_sum(a, conjugate(b), conjugate(c)));
                }
    }
}

TEST(Kronecker, CanonicalTripleIsAnOrbitInvariant) {
    Triple t{{3, 1}, {2, 2}, {2, 1, 1}};
    Triple c = canonical_triple(t);
    EXPECT_EQ(canonical_triple({t.c, t.a, t.b}), c);
    EXPECT_EQ(canonical_triple({conjugate(t.a), t.b, conjugate(t.c)}), c);
}

TEST(Kronecker, Expansions) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    SchurExpansion e1{{Partition({2}), 1}};
    EXPECT_EQ(eng.expansion({1, 1}, {1, 1}).coefficients, e1);
    SchurExpansion e2{{Partition({3}), 1}, {Partition({2, 1}), 1}, {Partition({1, 1, 1}), 1}};
    EXPECT_EQ(eng.expansion({2, 1}, {2, 1}).coefficients, e2);
    SchurExpansion e3{{Partition({3, 2}), 1}};
    EXPECT_EQ(eng.expansion({5}, {3, 2}).coefficients, e3);
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : enumerate(n))
            for (const auto& nu : enumerate(n)) {
                BigInt s = 0;
                for (const auto& [l, g] : eng.expansion(mu, nu).coefficients) s += g * cs.dimension(l);
                ASSERT_EQ(s, cs.dimension(mu) * cs.dimension(nu));
            }
}

TEST(Kronecker, Scans) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    auto k2 = eng.scan_max(Statistic::K, 2, std::nullopt, 2);
    EXPECT_EQ(k2.value, 1);
    ASSERT_TRUE(k2.witness);
    EXPECT_EQ(*k2.witness, (Triple{{2}, {2}, {2}}));

    auto kfs4 = eng.scan_max(Statistic::Kfs, 4, std::nullopt);
    EXPECT_EQ(kfs4.value, eng.kron({2, 2}, {2, 2}, {2, 2}));

    // A(6,2) against a direct maximum
    auto a62 = eng.scan_max(Statistic::A, 6, 2);
    BigInt best = 0;
    EnumerationConstraints two;
    two.max_length = 2;
    auto ps = enumerate(6, two);
    for (const auto& a : ps)
        for (const auto& b : ps)
            for (const auto& c : ps) best = std::max(best, eng.kron(a, b, c));
    EXPECT_EQ(a62.value, best);
    EXPECT_EQ(eng.kron(a62.witness->a, a62.witness->b, a62.witness->c), a62.value);

    EXPECT_THROW(eng.scan_max(Statistic::A, 6, std::nullopt), InvalidInput);
    EXPECT_THROW(eng.scan_max(Statistic::K, 15, std::nullopt), InfeasibleError);
}

TEST(Kronecker, StatisticChain) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    for (int n = 1; n <= 9; ++n) {
        BigInt K = eng.scan_max(Statistic::K, n, std::nullopt).value;
        BigInt Ks = eng.scan_max(Statistic::Ks, n, std::nullopt).value;
        BigInt Kfs = eng.scan_max(Statistic::Kfs, n, std::nullopt).value;
        EXPECT_LE(Kfs, Ks);
        EXPECT_LE(Ks, K);
        for (int k = 1; k <= 3; ++k) {
            EXPECT_LE(eng.scan_max(Statistic::A, n, k).value, K);
            EXPECT_LE(eng.scan_max(Statistic::As, n, k).value, Ks);
            EXPECT_LE(eng.scan_max(Statistic::B, n, k).value, K);
            EXPECT_LE(eng.scan_max(Statistic::Bfs, n, k).value, Kfs);
        }
    }
}

TEST(Kronecker, ScanIsThreadCountIndependent) {
    CharacterStore c1, c2;
    KroneckerEngine e1(c1), e2(c2);
    for (auto s : {Statistic::K, Statistic::Ks}) {
        auto a = e1.scan_max(s, 9, std::nullopt, 1);
        auto b = e2.scan_max(s, 9, std::nullopt, 8);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(Kronecker, SelfConjugatePositivity) {
    CharacterStore cs;
    KroneckerEngine eng(cs);
    EnumerationConstraints sc;
    sc.self_conjugate = true;
    for (int n = 1; n <= 12; ++n)
        for (const auto& l : enumerate(n, sc)) EXPECT_GE(eng.kron(l, l, l), 1) << l.str();
}
