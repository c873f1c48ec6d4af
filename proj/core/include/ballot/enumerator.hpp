#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ballot/walkmodel.hpp"

namespace ballot {

struct EnumeratorOptions {
    /// Upper limit on cells per dense layer; exceeding it raises ResourceLimit.
    std::uint64_t max_cells = 200'000'000;
};

/// Snapshot of one DP layer: every admissible point with coordinate sum
/// `step_count` inside the box, mapped to its (non-zero) walk count.
struct Layer {
    std::size_t step_count = 0;
    std::map<LatticePoint, mpz_class> counts;
};

/// Layered dynamic program over unit positive steps.
///
/// Holds two dense layers over a bounding box. The box is indexed by
/// coordinates 2..k; the first coordinate is implied by the step count, so a
/// layer needs prod_{i>=2}(bound_i + 1) cells. A cell that is not an
/// admissible point of the current layer always holds zero, which lets each
/// transition gather from at most k predecessors without bounds tests.
class LayerWalker {
public:
    /// Walks constrained to the chain region of `weights`, with x_i <= bounds[i].
    LayerWalker(const WeightVector& weights, std::vector<std::int64_t> bounds,
                EnumeratorOptions options = {});

    /// Test hook: same box, no region constraint (counts become multinomials).
    static LayerWalker unconstrained(std::vector<std::int64_t> bounds, EnumeratorOptions options = {});

    /// Chain constraint w_{i+1} x_i >= w_i x_{i+1} for arbitrary positive w
    /// (no ordering or coprimality requirement).
    static LayerWalker chain(std::vector<std::int64_t> weights, std::vector<std::int64_t> bounds,
                             EnumeratorOptions options = {});

    std::size_t step_count() const noexcept { return step_; }
    std::size_t dimension() const noexcept { return bounds_.size(); }
    std::uint64_t cells_per_layer() const noexcept { return cells_; }

    /// Moves from layer s to layer s + 1.
    void advance();

    /// Count of walks ending at `point` after step_count() steps (zero when absent).
    mpz_class count(std::span<const std::int64_t> point) const;

    /// Sum over every point of the current layer.
    mpz_class total() const;

    Layer snapshot() const;

private:
    LayerWalker(std::vector<std::int64_t> weights, std::vector<std::int64_t> bounds, bool constrained,
                EnumeratorOptions options);

    template <class Visit>
    void for_each_point(std::int64_t s, Visit&& visit) const;
    template <class Visit>
    void visit_level(std::size_t level, std::int64_t s, std::int64_t partial, std::uint64_t base,
                     std::vector<std::int64_t>& x, Visit& visit) const;

    std::vector<std::int64_t> weights_;
    std::vector<std::int64_t> bounds_;
    std::vector<std::uint64_t> strides_;
    bool constrained_ = true;
    std::uint64_t cells_ = 1;
    std::size_t step_ = 0;

    std::vector<mpz_class> current_;
    std::vector<mpz_class> next_;
    std::vector<std::uint64_t> live_current_;
    std::vector<std::uint64_t> live_next_;
};

/// Bounding box used by enumerate_fixed: x_i <= a_i * n_max.
std::vector<std::int64_t> fixed_bounds(const WeightVector& weights, std::size_t n_max);

/// Bounding box used by enumerate_free: x_i <= floor(n_max * a_i / (a_1 + ... + a_i)).
std::vector<std::int64_t> free_bounds(const WeightVector& weights, std::size_t n_max);
std::vector<std::int64_t> free_bounds(std::span<const std::int64_t> weights, std::size_t n_max);

/// x(n) for n = 0..n_max, walks from the origin to (a_1 n, ..., a_k n).
Sequence enumerate_fixed(const WalkProblem& problem, std::size_t n_max, EnumeratorOptions options = {});

/// x(n) for n = 0..n_max, all admissible n-step walks.
Sequence enumerate_free(const WalkProblem& problem, std::size_t n_max, EnumeratorOptions options = {});

/// All admissible n-step walks in c_1 x_1 >= c_2 x_2 >= ... >= c_k x_k >= 0,
/// for any positive coefficients. This is the chain region of the weights
/// (L/c_1, ..., L/c_k), L = lcm(c), which need not be sorted.
/// Throws Error{NonPositiveWeight | InvalidArgument | ResourceLimit}.
Sequence enumerate_free_coefficients(std::span<const std::int64_t> coefficients, std::size_t n_max,
                                     EnumeratorOptions options = {});

/// Dispatches on problem.mode.
Sequence enumerate(const WalkProblem& problem, std::size_t n_max, EnumeratorOptions options = {});

}  // namespace ballot
