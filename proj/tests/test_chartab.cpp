#include <gtest/gtest.h>

#include <filesystem>

#include "kroncalc/chartab.hpp"
#include "oracles.hpp"

using namespace kroncalc;

TEST(Characters, SymmetricGroupThree) {
    CharacterStore cs;
    EXPECT_EQ(cs.character({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(cs.character({2, 1}, {3}), -1);
    EXPECT_EQ(cs.character({2, 1}, {2, 1}), 0);
    EXPECT_EQ(cs.character({1, 1, 1}, {2, 1}), -1);
    for (const auto& rho : enumerate(5)) EXPECT_EQ(cs.character({5}, rho), 1);
}

TEST(Characters, ClassSizes) {
    EXPECT_EQ(class_size({1, 1, 1}), 1);
    EXPECT_EQ(class_size({3}), 2);
    EXPECT_EQ(class_size({2, 1}), 3);
    for (int n = 1; n <= 12; ++n) {
        BigInt total = 0;
        for (const auto& rho : enumerate(n)) total += class_size(rho);
        EXPECT_EQ(total, factorial(n));
    }
}

TEST(Characters, AgreeWithPermutationCharacterInversion) {
    CharacterStore cs;
    for (int n = 1; n <= 7; ++n) {
        oracle::Characters chi(n);
        for (const auto& l : enumerate(n))
            for (const auto& r : enumerate(n)) EXPECT_EQ(cs.character(l, r), chi(l, r)) << l.str() << " @ " << r.str();
    }
}

TEST(Characters, Dimension) {
    CharacterStore cs;
    EXPECT_EQ(cs.dimension({2, 1}), 2);
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(cs.dimension({n}), 1);
        for (const auto& l : enumerate(n)) EXPECT_EQ(cs.dimension(l), oracle::count_syt(l));
    }
    for (int m = 0; m <= 6; ++m) {
        std::vector<int> hook{m + 1};
        for (int i = 0; i < m; ++i) hook.push_back(1);
        EXPECT_EQ(cs.dimension(Partition(hook)), binomial(2 * m, m));
    }
}

TEST(Characters, RegularCharacterAndOrthogonality) {
    CharacterStore cs;
    for (int n = 1; n <= 10; ++n) {
        const auto& classes = cs.classes(n);
        const Partition identity = classes.back();
        for (const auto& rho : classes) {
            BigInt s = 0;
            for (const auto& l : enumerate(n)) s += cs.dimension(l) * cs.character(l, rho);
            EXPECT_EQ(s, rho == identity ? factorial(n) : BigInt(0)) << n << ' ' << rho.str();
        }
        BigInt sq = 0;
        for (const auto& l : enumerate(n)) sq += cs.dimension(l) * cs.dimension(l);
        EXPECT_EQ(sq, factorial(n));
    }
}

TEST(Characters, ConjugationTwist) {
    CharacterStore cs;
    for (int n = 1; n <= 10; ++n)
        for (const auto& l : enumerate(n))
            for (const auto& r : enumerate(n)) {
                BigInt sign = (n - r.length()) % 2 == 0 ? 1 : -1;
                ASSERT_EQ(cs.character(conjugate(l), r), sign * cs.character(l, r));
            }
}

TEST(Characters, TableOrthogonality) {
    CharacterStore cs;
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(cs.table(n)->verify_orthogonality()) << n;
}

TEST(Characters, GuardRefusesLargeN) {
    CharacterStore cs(Limits{8, 8, 8, 8});
    EXPECT_THROW(cs.character({9}, {9}), InfeasibleError);
    EXPECT_THROW(cs.character({2, 1}, {2, 2}), InvalidInput);
}

TEST(Characters, TableCacheRoundTrip) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "kroncalc_chartab_test";
    fs::remove_all(dir);
    {
        CharacterStore cs(Limits{}, dir);
        cs.table(6);
    }
    EXPECT_TRUE(fs::exists(dir / CharacterStore::cache_file_name(6)));
    CharacterStore fresh(Limits{}, dir);
    auto t = fresh.table(6);
    EXPECT_GT(fresh.cache_hits(), 0u);
    oracle::Characters chi(6);
    for (const auto& l : enumerate(6))
        for (const auto& r : enumerate(6)) EXPECT_EQ(fresh.character(l, r), chi(l, r));
    fs::remove_all(dir);
}
