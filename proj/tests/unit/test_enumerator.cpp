#include <gtest/gtest.h>

#include <numeric>

#include "ballot/closedform.hpp"
#include "ballot/enumerator.hpp"
#include "ballot/error.hpp"
#include "oracle.hpp"

namespace ballot {
namespace {

using V = std::vector<std::int64_t>;

std::vector<mpz_class> Z(std::initializer_list<const char*> values) {
    std::vector<mpz_class> out;
    for (const auto* v : values) out.emplace_back(v);
    return out;
}

Sequence fixed(const V& w, std::size_t n_max) { return enumerate_fixed({validate(w), EndpointMode::Fixed}, n_max); }
Sequence free_walks(const V& w, std::size_t n_max) { return enumerate_free({validate(w), EndpointMode::Free}, n_max); }

// Every valid weight vector of length k with entries <= max_entry.
std::vector<V> weight_vectors(std::size_t k, std::int64_t max_entry) {
    std::vector<V> out;
    for (const auto& t : oracle::sorted_targets(k, max_entry * static_cast<std::int64_t>(k))) {
        if (t.back() < 1 || t.front() > max_entry) continue;
        try {
            validate(t);
            out.push_back(t);
        } catch (const Error&) {
        }
    }
    return out;
}

TEST(EnumerateFixed, Examples) {
    EXPECT_EQ(fixed({1, 1}, 4).terms, Z({"1", "1", "2", "5", "14"}));
    EXPECT_EQ(fixed({2, 1}, 4).terms, Z({"1", "1", "3", "12", "55"}));
    EXPECT_EQ(fixed({2, 1, 1}, 1).terms, Z({"1", "1"}));
    EXPECT_EQ(fixed({1, 1, 1}, 3).terms, Z({"1", "1", "5", "42"}));
    EXPECT_EQ(fixed({1, 1}, 0).terms, Z({"1"}));
}

TEST(EnumerateFixed, MetadataAndOffset) {
    const auto s = fixed({2, 1, 1}, 3);
    EXPECT_EQ(s.offset, 0u);
    EXPECT_EQ(s.provenance, "F:2,1,1");
    EXPECT_EQ(s.size(), 4u);
}

TEST(EnumerateFixed, FussCatalan) {
    const auto s = fixed({2, 1}, 25);
    for (std::size_t n = 0; n <= 25; ++n) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), 3 * n, n);
        EXPECT_EQ(s.at(n) * (2 * n + 1), binom) << n;
    }
}

TEST(EnumerateFixed, CatalanAndSuperCatalan) {
    const auto two = fixed({1, 1}, 30);
    for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(two.at(n), closedform::catalan(n));
    const auto four = fixed({1, 1, 1, 1}, 8);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(four.at(n), closedform::super_catalan(4, n));
}

TEST(EnumerateFixed, MatchesBruteForceOnWeightedProblems) {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& w : weight_vectors(k, 3)) {
            const auto seq = fixed(w, 2);
            const auto region = oracle::chain_region(w);
            for (std::int64_t n = 0; n <= 2; ++n) {
                V target;
                for (auto a : w) target.push_back(a * n);
                if (std::accumulate(target.begin(), target.end(), std::int64_t{0}) > 10) continue;
                EXPECT_EQ(seq.at(n), oracle::count_to(region, target)) << format_weight_list(w) << " n=" << n;
            }
        }
    }
}

// DP count to any admissible target with coordinate sum <= 8, for every weight
// vector with k <= 4 and entries <= 4: equal to word enumeration, and to the
// hook formula when the weights are all 1.
TEST(LayerWalker, TwoOracleEquality) {
    std::size_t checked = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
        for (const auto& w : weight_vectors(k, 4)) {
            const auto weights = validate(w);
            const auto region = oracle::chain_region(w);
            for (const auto& t : oracle::sorted_targets(k, 8)) {
                if (!admissible(weights, t)) continue;
                LayerWalker walker(weights, t);
                const auto steps = std::accumulate(t.begin(), t.end(), std::int64_t{0});
                for (std::int64_t s = 0; s < steps; ++s) walker.advance();
                const auto dp = walker.count(t);
                EXPECT_EQ(dp, oracle::count_to(region, t)) << format_weight_list(w) << " -> " << format_weight_list(t);
                if (w == V(k, 1)) {
                    EXPECT_EQ(dp, closedform::walk_count(t));
                }
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 200u);
}

TEST(LayerWalker, UnconstrainedGivesMultinomial) {
    for (const auto& t : {V{2, 1}, V{1, 2}, V{3, 0, 2}, V{2, 2, 2}, V{1, 2, 3, 1}}) {
        auto walker = LayerWalker::unconstrained(t);
        const auto steps = std::accumulate(t.begin(), t.end(), std::int64_t{0});
        for (std::int64_t s = 0; s < steps; ++s) walker.advance();
        EXPECT_EQ(walker.count(t), closedform::multinomial(t));
        EXPECT_EQ(walker.count(t), oracle::count_to(oracle::whole_orthant(), t));
    }
}

TEST(LayerWalker, SnapshotInvariants) {
    const auto w = validate(V{3, 2, 1});
    LayerWalker walker(w, fixed_bounds(w, 3));
    for (int s = 0; s < 12; ++s) {
        const auto layer = walker.snapshot();
        EXPECT_EQ(layer.step_count, walker.step_count());
        mpz_class sum = 0;
        for (const auto& [p, c] : layer.counts) {
            EXPECT_TRUE(admissible(w, p));
            EXPECT_EQ(std::accumulate(p.begin(), p.end(), std::int64_t{0}), static_cast<std::int64_t>(layer.step_count));
            EXPECT_GE(c, 1);
            sum += c;
        }
        EXPECT_EQ(sum, walker.total());
        walker.advance();
    }
}

TEST(LayerWalker, ResourceLimit) {
    const auto w = validate(V{1, 1, 1, 1});
    try {
        LayerWalker walker(w, fixed_bounds(w, 200), EnumeratorOptions{1000});
        FAIL() << "expected ResourceLimit";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
    }
    EXPECT_THROW(enumerate_fixed({w, EndpointMode::Fixed}, 50, EnumeratorOptions{1000}), Error);
}

TEST(LayerWalker, DimensionChecks) {
    const auto w = validate(V{2, 1});
    LayerWalker walker(w, V{4, 2});
    EXPECT_THROW(walker.count(V{1, 1, 1}), Error);
    EXPECT_EQ(walker.count(V{9, 0}), 0);
    EXPECT_THROW(LayerWalker(w, V{1}), Error);
}

TEST(EnumerateFree, Examples) {
    EXPECT_EQ(free_walks({1, 1}, 8).terms, Z({"1", "1", "2", "3", "6", "10", "20", "35", "70"}));
    EXPECT_EQ(free_walks({2, 1}, 5).terms, Z({"1", "1", "1", "2", "3", "4"}));
    EXPECT_EQ(free_walks({1, 1, 1}, 6).terms, Z({"1", "1", "2", "4", "9", "21", "51"}));
    EXPECT_EQ(free_walks(V(13, 1), 16).terms,
              Z({"1", "1", "2", "4", "10", "26", "76", "232", "764", "2620", "9496", "35696", "140152", "568504",
                 "2390479", "10349521", "46206511"}));
}

TEST(EnumerateFree, CentralBinomial) {
    const auto s = free_walks({1, 1}, 60);
    for (std::size_t n = 0; n <= 60; ++n) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
        EXPECT_EQ(s.at(n), binom);
    }
    EXPECT_EQ(s.provenance, "N:1,1");
}

TEST(EnumerateFree, MatchesBruteForce) {
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& w : weight_vectors(k, 4)) {
            const auto seq = free_walks(w, 8);
            const auto region = oracle::chain_region(w);
            for (std::size_t n = 0; n <= 8; ++n) {
                EXPECT_EQ(seq.at(n), oracle::count_free(region, k, n)) << format_weight_list(w) << " n=" << n;
            }
        }
    }
}

TEST(EnumerateFree, Conservation) {
    for (const auto& w : {V{1, 1}, V{2, 1}, V{5, 2}, V{1, 1, 1}, V{2, 1, 1}, V{4, 3, 1}, V{1, 1, 1, 1}, V{3, 2, 2, 1}}) {
        const auto s = free_walks(w, 60);
        for (std::size_t n = 0; n < 60; ++n) {
            EXPECT_LE(s.at(n + 1), s.at(n) * static_cast<long>(w.size())) << format_weight_list(w) << " n=" << n;
        }
    }
}

TEST(EnumerateFree, TighterRegionHasFewerWalks) {
    const auto classical = validate(V{1, 1});
    const auto skew = validate(V{2, 1});
    LayerWalker a(classical, free_bounds(classical, 12));
    LayerWalker b(skew, free_bounds(skew, 12));
    for (int s = 0; s <= 12; ++s) {
        EXPECT_LE(b.total(), a.total()) << s;
        a.advance();
        b.advance();
    }
}

TEST(EnumerateFree, DegenerateDimensionOne) {
    EXPECT_EQ(free_walks({1}, 5).terms, Z({"1", "1", "1", "1", "1", "1"}));
    EXPECT_EQ(fixed({1}, 5).terms, Z({"1", "1", "1", "1", "1", "1"}));
}

TEST(Enumerate, Deterministic) {
    const WalkProblem p{validate(V{3, 2, 1}), EndpointMode::Fixed};
    const WalkProblem q{validate(V{2, 1, 1}), EndpointMode::Free};
    EXPECT_EQ(enumerate(p, 30), enumerate(p, 30));
    EXPECT_EQ(enumerate(q, 80), enumerate(q, 80));
    EXPECT_EQ(enumerate(p, 30).terms, enumerate_fixed(p, 30).terms);
    EXPECT_EQ(enumerate(q, 30).terms, enumerate_free(q, 30).terms);
}

TEST(Bounds, Values) {
    const auto w = validate(V{2, 1, 1});
    EXPECT_EQ(fixed_bounds(w, 10), (V{20, 10, 10}));
    EXPECT_EQ(free_bounds(w, 12), (V{12, 4, 3}));
}

TEST(FreeCoefficients, MatchesBruteForce) {
    for (const auto& c : {V{2, 1, 1}, V{1, 2, 2}, V{3, 2, 1}, V{1, 1, 2}, V{2, 3}}) {
        const auto seq = enumerate_free_coefficients(c, 9);
        const auto region = oracle::coefficient_region(c);
        for (std::size_t n = 0; n <= 9; ++n) {
            EXPECT_EQ(seq.at(n), oracle::count_free(region, c.size(), n)) << format_weight_list(c) << " n=" << n;
        }
    }
}

TEST(FreeCoefficients, AgreesWithChainForm) {
    // x >= 2y is both the coefficient form (1,2) and the chain region of (2,1).
    EXPECT_EQ(enumerate_free_coefficients(V{1, 2}, 40).terms, free_walks({2, 1}, 40).terms);
    EXPECT_EQ(enumerate_free_coefficients(V{1, 1, 1}, 40).terms, free_walks({1, 1, 1}, 40).terms);
    EXPECT_THROW(enumerate_free_coefficients(V{1, 0}, 3), Error);
}

}  // namespace
}  // namespace ballot
