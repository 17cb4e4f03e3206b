#include "symdec/admissible.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace symdec;

namespace {

// Exhaustive oracle: every strictly decreasing (k_n > ... > k_j >= j) whose
// binomial sum is r, for k below a cap.
std::vector<std::vector<unsigned long>> all_reps(long r, unsigned n, unsigned long cap) {
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> cur;
    auto rec = [&](auto&& self, unsigned long i, unsigned long below, mpz_class rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (i == 0)
            return;
        for (unsigned long k = i; k < below && k <= cap; ++k) {
            const mpz_class c = binomial(k, i);
            if (c > rest)
                break;
            cur.push_back(k);
            self(self, i - 1, k, rest - c);
            cur.pop_back();
        }
    };
    rec(rec, n, cap + 1, r);
    return out;
}

} // namespace

TEST(MacaulayRep, Examples) {
    EXPECT_TRUE(macaulay_rep(0, 3).terms.empty());
    const auto a = macaulay_rep(3, 1);
    ASSERT_EQ(a.terms.size(), 1u);
    EXPECT_EQ(a.terms[0], (std::pair<unsigned long, unsigned long>{3, 1}));
    const auto b = macaulay_rep(4, 2);
    ASSERT_EQ(b.terms.size(), 2u);
    EXPECT_EQ(b.terms[0], (std::pair<unsigned long, unsigned long>{3, 2}));
    EXPECT_EQ(b.terms[1], (std::pair<unsigned long, unsigned long>{1, 1}));
    EXPECT_THROW(macaulay_rep(-1, 2), InvalidInput);
    EXPECT_THROW(macaulay_rep(1, 0), InvalidInput);
}

TEST(MacaulayRep, GreedyIsTheUniqueRepresentation) {
    for (long r = 1; r <= 40; ++r)
        for (unsigned n = 1; n <= 4; ++n) {
            const auto reps = all_reps(r, n, 45);
            ASSERT_EQ(reps.size(), 1u) << r << " " << n;
            const auto g = macaulay_rep(r, n);
            ASSERT_EQ(g.terms.size(), reps[0].size());
            for (std::size_t i = 0; i < g.terms.size(); ++i)
                EXPECT_EQ(g.terms[i].first, reps[0][i]);
        }
}

TEST(MacaulayRep, ReconstructsAndDecreases) {
    for (long r = 0; r <= 200; ++r)
        for (unsigned n = 1; n <= 6; ++n) {
            const auto rep = macaulay_rep(r, n);
            EXPECT_EQ(rep.value(), r);
            for (std::size_t i = 1; i < rep.terms.size(); ++i) {
                EXPECT_GT(rep.terms[i - 1].first, rep.terms[i].first);
                EXPECT_EQ(rep.terms[i - 1].second, rep.terms[i].second + 1);
            }
        }
}

TEST(MacaulayBound, ExamplesAndMonotonicity) {
    EXPECT_EQ(macaulay_bound(0, 4), 0);
    EXPECT_EQ(macaulay_bound(4, 2), 5);
    EXPECT_EQ(macaulay_bound(2, 1), 3);
    for (unsigned n = 1; n <= 6; ++n)
        for (long r = 0; r < 200; ++r)
            EXPECT_LE(macaulay_bound(r, n), macaulay_bound(r + 1, n));
}

TEST(Admissible, Examples) {
    EXPECT_TRUE(is_b_admissible(2, {2, 2, 3, 4}));
    EXPECT_FALSE(is_b_admissible(2, {2, 1, 2}));
    EXPECT_FALSE(is_b_admissible(2, {1, 3}));
    EXPECT_FALSE(is_b_admissible(2, {3, 7, 7, 3}));
    EXPECT_TRUE(is_b_admissible(3, {3, 7, 7, 3}));
    EXPECT_FALSE(is_b_admissible(2, {2, -1}));
    EXPECT_TRUE(is_b_admissible(2, {2, 0, 0}));
    EXPECT_TRUE(is_b_admissible(1, {5}));
    EXPECT_THROW(is_b_admissible(0, {1}), InvalidInput);
    EXPECT_THROW(is_b_admissible(2, {}), InvalidInput);
}

TEST(Admissible, FieldCaseMatchesMacaulay) {
    // With h0 = 1 the test is Macaulay's bound h_{n+1} <= h_n^<n>; b large enough
    // that q = 0 for every n, so h1 <= b and then the classical bound.
    EXPECT_TRUE(is_b_admissible(3, {1, 3, 6, 10}));
    EXPECT_FALSE(is_b_admissible(3, {1, 3, 6, 11}));
    EXPECT_TRUE(is_b_admissible(3, {1, 2, 3, 4}));
    EXPECT_FALSE(is_b_admissible(3, {1, 2, 4}));
}

TEST(Admissible, BaseLengthCondition) {
    EXPECT_TRUE(satisfies_base_length({2, 4, 1}, 2));
    EXPECT_FALSE(satisfies_base_length({3, 4, 1}, 2));
    EXPECT_FALSE(is_b_admissible_over(2, {3, 4}, 2));
    EXPECT_TRUE(is_b_admissible_over(2, {2, 4}, 2));
}

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(enumerate_admissible(2, 1, 1, 1, 1), (std::vector<std::vector<int>>{{1, 1}}));
    EXPECT_THROW(enumerate_admissible(2, 0, 1, 2, 1), InvalidInput);
    EXPECT_THROW(enumerate_admissible(2, 1, 3, 2, 1), InvalidInput);
}

TEST(Enumerate, OutputIsAdmissibleSortedAndPrefixClosed) {
    const auto all = enumerate_admissible(2, 2, 1, 3, 2);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& s : all) {
        EXPECT_TRUE(is_b_admissible(2, s));
        EXPECT_LE(s.back(), 2);
        for (std::size_t k = 1; k < s.size(); ++k)
            EXPECT_TRUE(is_b_admissible(2, std::vector<int>(s.begin(), s.begin() + static_cast<long>(k))));
    }
}

TEST(Enumerate, MatchesExhaustiveFilter) {
    // Oracle: all sequences with entries in [1, 12] filtered by is_b_admissible.
    std::vector<std::vector<int>> brute;
    std::vector<int> cur{2};
    auto rec = [&](auto&& self) -> void {
        if (cur.size() >= 2 && cur.back() <= 2 && is_b_admissible(2, cur))
            brute.push_back(cur);
        if (cur.size() == 4)
            return;
        for (int x = 1; x <= 12; ++x) {
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(enumerate_admissible(2, 2, 1, 3, 2), brute);
}

TEST(Enumerate, ListedSequencesPlusFourMore) {
    const std::vector<std::vector<int>> listed{
        {2, 1}, {2, 2}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {2, 4, 1}, {2, 4, 2},
        {2, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2, 1}, {2, 2, 2, 2}, {2, 2, 3, 1}, {2, 2, 3, 2}, {2, 3, 1, 1},
        {2, 3, 2, 1}, {2, 3, 2, 2}, {2, 3, 3, 1}, {2, 3, 3, 2}, {2, 3, 4, 1}, {2, 3, 4, 2}, {2, 4, 1, 1},
        {2, 4, 2, 1}, {2, 4, 2, 2}, {2, 4, 3, 1}, {2, 4, 3, 2}, {2, 4, 4, 1}, {2, 4, 4, 2}};
    const auto all = enumerate_admissible(2, 2, 1, 3, 2);
    std::vector<std::vector<int>> extra;
    for (const auto& s : all)
        if (std::find(listed.begin(), listed.end(), s) == listed.end())
            extra.push_back(s);
    for (const auto& s : listed)
        EXPECT_NE(std::find(all.begin(), all.end(), s), all.end());
    EXPECT_EQ(extra, (std::vector<std::vector<int>>{{2, 4, 5, 1}, {2, 4, 5, 2}, {2, 4, 6, 1}, {2, 4, 6, 2}}));
}
