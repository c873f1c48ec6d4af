#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ballot {

/// Positive step weights a1 >= a2 >= ... >= ak with gcd 1.
///
/// Only `validate` constructs one, so every instance satisfies the invariants.
/// The weights define the chain region
///   (M/a1) x1 >= (M/a2) x2 >= ... >= (M/ak) xk >= 0,   M = lcm(a1, ..., ak),
/// which is equivalent to a_{i+1} x_i >= a_i x_{i+1} for each consecutive pair.
class WeightVector {
public:
    std::span<const std::int64_t> entries() const noexcept { return entries_; }
    std::size_t dimension() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }

    std::int64_t sum() const noexcept;
    /// lcm of all entries.
    std::int64_t lcm() const noexcept { return lcm_; }

    bool operator==(const WeightVector&) const = default;

private:
    friend WeightVector validate(std::span<const std::int64_t> weights);
    explicit WeightVector(std::vector<std::int64_t> entries, std::int64_t lcm)
        : entries_(std::move(entries)), lcm_(lcm) {}

    std::vector<std::int64_t> entries_;
    std::int64_t lcm_ = 1;
};

/// Throws Error{NonPositiveWeight | NotSorted | NotCoprime | InvalidArgument}.
WeightVector validate(std::span<const std::int64_t> weights);

/// (M/a_k, ..., M/a_1). Walks to (a'_1 n, ..., a'_k n) in the chain region of
/// these weights are, after reversing the walk and the coordinate order, the
/// walks to ((M/a_1) n, ..., (M/a_k) n) in a_1 x_1 >= a_2 x_2 >= ... >= a_k x_k.
/// Involutive; the result is always sorted and coprime.
WeightVector reciprocal_weights(const WeightVector& weights);

enum class EndpointMode { Fixed, Free };

struct WalkProblem {
    WeightVector weights;
    EndpointMode mode = EndpointMode::Fixed;

    bool operator==(const WalkProblem&) const = default;
};

using LatticePoint = std::vector<std::int64_t>;

/// Chain-region membership with exact integer arithmetic.
/// Throws Error{DimensionMismatch} when the point has the wrong length.
bool admissible(const WeightVector& weights, std::span<const std::int64_t> point);

/// "F:2,1,1" for fixed endpoint, "N:1,1,1" for free endpoint.
std::string canonical_key(const WalkProblem& problem);

/// Inverse of canonical_key. Throws Error{InvalidKey} or any validate() error.
WalkProblem parse_key(std::string_view key);

/// Exact terms x(offset), x(offset+1), ...
struct Sequence {
    std::size_t offset = 0;
    std::vector<mpz_class> terms;
    std::string provenance;

    std::size_t size() const noexcept { return terms.size(); }
    bool empty() const noexcept { return terms.empty(); }
    /// Term with true index n (not the vector position).
    const mpz_class& at(std::size_t n) const { return terms.at(n - offset); }
    std::size_t last_index() const noexcept { return offset + terms.size() - 1; }

    /// Terms and offset only; provenance is metadata.
    bool operator==(const Sequence& other) const {
        return offset == other.offset && terms == other.terms;
    }
};

/// Parses a comma-separated weight list such as "2,1,1" (no validation beyond syntax).
std::vector<std::int64_t> parse_weight_list(std::string_view text);

std::string format_weight_list(std::span<const std::int64_t> weights);

}  // namespace ballot
