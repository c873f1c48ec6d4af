#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "ballot/error.hpp"
#include "ballot/walkmodel.hpp"
#include "oracle.hpp"

namespace ballot {
namespace {

using V = std::vector<std::int64_t>;

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no Error thrown";
    return ErrorCode::InvalidArgument;
}

TEST(Validate, AcceptsSortedCoprime) {
    const auto w = validate(V{2, 1, 1});
    EXPECT_EQ(w.dimension(), 3u);
    EXPECT_EQ(w.lcm(), 2);
    EXPECT_EQ(w.sum(), 4);
    EXPECT_EQ(V(w.entries().begin(), w.entries().end()), (V{2, 1, 1}));

    const auto c = validate(V{1, 1});
    EXPECT_EQ(c.dimension(), 2u);
    EXPECT_EQ(c.lcm(), 1);

    EXPECT_EQ(validate(V{6, 4, 3}).lcm(), 12);
    EXPECT_EQ(validate(V{1}).dimension(), 1u);
}

TEST(Validate, RejectsEachInvariant) {
    EXPECT_EQ(code_of([] { validate(V{4, 2}); }), ErrorCode::NotCoprime);
    EXPECT_EQ(code_of([] { validate(V{1, 2}); }), ErrorCode::NotSorted);
    EXPECT_EQ(code_of([] { validate(V{2, 0}); }), ErrorCode::NonPositiveWeight);
    EXPECT_EQ(code_of([] { validate(V{-1}); }), ErrorCode::NonPositiveWeight);
    EXPECT_EQ(code_of([] { validate(V{}); }), ErrorCode::InvalidArgument);
}

TEST(Validate, Idempotent) {
    for (const auto& v : {V{1}, V{2, 1, 1}, V{4, 4, 3}, V{5, 3}, V{1, 1, 1, 1}}) {
        const auto once = validate(v);
        const auto twice = validate(once.entries());
        EXPECT_EQ(once, twice);
    }
}

TEST(Admissible, Examples) {
    EXPECT_TRUE(admissible(validate(V{1, 1, 1}), V{3, 2, 2}));
    EXPECT_FALSE(admissible(validate(V{2, 1, 1}), V{1, 1, 0}));
    EXPECT_TRUE(admissible(validate(V{3, 2, 1}), V{3, 2, 1}));
    EXPECT_EQ(code_of([] { admissible(validate(V{1, 1}), V{1, 1, 1}); }), ErrorCode::DimensionMismatch);
}

TEST(Admissible, OriginAndScaledDiagonal) {
    for (const auto& v : {V{1}, V{1, 1}, V{2, 1}, V{2, 1, 1}, V{4, 3, 2}, V{3, 3, 2, 1}}) {
        const auto w = validate(v);
        EXPECT_TRUE(admissible(w, V(v.size(), 0)));
        for (std::int64_t t = 0; t <= 20; ++t) {
            V p;
            for (auto a : v) p.push_back(a * t);
            EXPECT_TRUE(admissible(w, p)) << format_weight_list(v) << " t=" << t;
        }
    }
}

TEST(Admissible, ClassicalMeansNonIncreasing) {
    const auto w = validate(V{1, 1, 1});
    for (std::int64_t x = 0; x <= 4; ++x) {
        for (std::int64_t y = 0; y <= 4; ++y) {
            for (std::int64_t z = 0; z <= 4; ++z) {
                EXPECT_EQ(admissible(w, V{x, y, z}), x >= y && y >= z);
            }
        }
    }
}

TEST(Admissible, MatchesScaledComparison) {
    std::mt19937 rng(7);
    for (const auto& v : {V{2, 1}, V{3, 2}, V{2, 1, 1}, V{4, 3, 2}, V{4, 4, 3}, V{3, 2, 2, 1}}) {
        const auto w = validate(v);
        const auto region = oracle::chain_region(v);
        std::uniform_int_distribution<std::int64_t> coord(0, 12);
        for (int trial = 0; trial < 500; ++trial) {
            V p(v.size());
            for (auto& c : p) c = coord(rng);
            EXPECT_EQ(admissible(w, p), region(p));
        }
    }
}

TEST(Reciprocal, ExamplesAndInvolution) {
    EXPECT_EQ(reciprocal_weights(validate(V{2, 1, 1})), validate(V{2, 2, 1}));
    EXPECT_EQ(reciprocal_weights(validate(V{3, 2, 1})), validate(V{6, 3, 2}));
    EXPECT_EQ(reciprocal_weights(validate(V{4, 2, 1})), validate(V{4, 2, 1}));
    for (const auto& v : {V{1}, V{2, 1}, V{4, 3, 1}, V{4, 4, 3}, V{5, 3, 2, 1}}) {
        const auto w = validate(v);
        EXPECT_EQ(reciprocal_weights(reciprocal_weights(w)), w);
    }
}

TEST(CanonicalKey, Format) {
    EXPECT_EQ(canonical_key({validate(V{2, 1, 1}), EndpointMode::Fixed}), "F:2,1,1");
    EXPECT_EQ(canonical_key({validate(V{1, 1, 1}), EndpointMode::Free}), "N:1,1,1");
    const WalkProblem a{validate(V{4, 3, 3}), EndpointMode::Fixed};
    const WalkProblem b{validate(V{4, 3, 3}), EndpointMode::Fixed};
    EXPECT_EQ(canonical_key(a), canonical_key(b));
}

TEST(CanonicalKey, Injective) {
    std::set<std::string> keys;
    std::size_t count = 0;
    for (const auto& v : {V{1}, V{1, 1}, V{2, 1}, V{1, 1, 1}, V{11, 1}, V{1, 1, 1, 1}, V{2, 1, 1}}) {
        for (auto mode : {EndpointMode::Fixed, EndpointMode::Free}) {
            keys.insert(canonical_key({validate(v), mode}));
            ++count;
        }
    }
    EXPECT_EQ(keys.size(), count);
}

TEST(ParseKey, RoundTripAndErrors) {
    for (const auto* key : {"F:2,1,1", "N:1,1,1", "F:1", "N:13,7,2"}) {
        EXPECT_EQ(canonical_key(parse_key(key)), key);
    }
    for (const auto* bad : {"", "F", "F:", "X:1,1", "F-1,1", "F:1,,1", "F:a"}) {
        EXPECT_EQ(code_of([&] { parse_key(bad); }), ErrorCode::InvalidKey) << bad;
    }
    EXPECT_EQ(code_of([] { parse_key("F:4,2"); }), ErrorCode::NotCoprime);
}

TEST(WeightList, ParseAndFormat) {
    EXPECT_EQ(parse_weight_list("2,1,1"), (V{2, 1, 1}));
    EXPECT_EQ(parse_weight_list("-3"), (V{-3}));
    EXPECT_EQ(format_weight_list(V{10, 3}), "10,3");
    for (const auto* bad : {"", "1,", ",1", "1 ,2", "x"}) {
        EXPECT_EQ(code_of([&] { parse_weight_list(bad); }), ErrorCode::InvalidArgument) << bad;
    }
}

TEST(SequenceType, TrueIndexAccess) {
    Sequence s{5, {mpz_class(7), mpz_class(8)}, "t"};
    EXPECT_EQ(s.at(5), 7);
    EXPECT_EQ(s.at(6), 8);
    EXPECT_EQ(s.last_index(), 6u);
    EXPECT_THROW(s.at(7), std::out_of_range);
    Sequence other{5, {mpz_class(7), mpz_class(8)}, "other provenance"};
    EXPECT_EQ(s, other);
}

}  // namespace
}  // namespace ballot
