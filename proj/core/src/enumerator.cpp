#include "ballot/enumerator.hpp"

#include <algorithm>
#include <numeric>

#include "ballot/error.hpp"

namespace ballot {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

LayerWalker::LayerWalker(const WeightVector& weights, std::vector<std::int64_t> bounds,
                         EnumeratorOptions options)
    : LayerWalker({weights.entries().begin(), weights.entries().end()}, std::move(bounds), true, options) {}

LayerWalker LayerWalker::unconstrained(std::vector<std::int64_t> bounds, EnumeratorOptions options) {
    std::vector<std::int64_t> ones(bounds.size(), 1);
    return LayerWalker(std::move(ones), std::move(bounds), false, options);
}

LayerWalker LayerWalker::chain(std::vector<std::int64_t> weights, std::vector<std::int64_t> bounds,
                               EnumeratorOptions options) {
    for (auto w : weights) {
        if (w < 1) throw Error(ErrorCode::NonPositiveWeight, "chain weights must be >= 1");
    }
    return LayerWalker(std::move(weights), std::move(bounds), true, options);
}

LayerWalker::LayerWalker(std::vector<std::int64_t> weights, std::vector<std::int64_t> bounds,
                         bool constrained, EnumeratorOptions options)
    : weights_(std::move(weights)), bounds_(std::move(bounds)), constrained_(constrained) {
    const auto k = bounds_.size();
    if (k == 0 || weights_.size() != k) {
        throw Error(ErrorCode::DimensionMismatch, "bounding box dimension does not match the weights");
    }
    for (auto b : bounds_) {
        if (b < 0) throw Error(ErrorCode::InvalidArgument, "negative bounding box extent");
    }
    strides_.assign(k, 0);
    std::uint64_t stride = 1;
    for (std::size_t i = k; i-- > 1;) {
        strides_[i] = stride;
        const auto extent = static_cast<std::uint64_t>(bounds_[i]) + 1;
        if (stride > options.max_cells / extent) {
            throw Error(ErrorCode::ResourceLimit,
                        "dense layer would exceed the cap of " + std::to_string(options.max_cells) + " cells");
        }
        stride *= extent;
    }
    cells_ = stride;
    current_.resize(cells_);
    next_.resize(cells_);
    // Layer 0: the origin, flat index 0.
    current_[0] = 1;
    live_current_.push_back(0);
}

template <class Visit>
void LayerWalker::visit_level(std::size_t level, std::int64_t s, std::int64_t partial, std::uint64_t base,
                              std::vector<std::int64_t>& x, Visit& visit) const {
    const auto k = bounds_.size();
    const auto& w = weights_;
    std::int64_t hi = std::min(bounds_[level], s - partial);
    if (constrained_ && level >= 2) hi = std::min(hi, floor_div(w[level] * x[level - 1], w[level - 1]));

    if (level + 1 == k) {
        std::int64_t lo = std::max<std::int64_t>(0, s - partial - bounds_[0]);
        if (constrained_) {
            if (level == 1) {
                hi = std::min(hi, floor_div(w[1] * s, w[0] + w[1]));
            } else {
                hi = std::min(hi, s - partial - ceil_div(w[0] * x[1], w[1]));
            }
        }
        const auto stride = strides_[level];
        for (std::int64_t t = lo; t <= hi; ++t) {
            x[level] = t;
            x[0] = s - partial - t;
            visit(base + static_cast<std::uint64_t>(t) * stride, x);
        }
        return;
    }

    for (std::int64_t t = 0; t <= hi; ++t) {
        if (constrained_ && level == 1 && t + ceil_div(w[0] * t, w[1]) > s) break;
        x[level] = t;
        visit_level(level + 1, s, partial + t, base + static_cast<std::uint64_t>(t) * strides_[level], x, visit);
    }
}

template <class Visit>
void LayerWalker::for_each_point(std::int64_t s, Visit&& visit) const {
    std::vector<std::int64_t> x(bounds_.size(), 0);
    if (bounds_.size() == 1) {
        if (s <= bounds_[0]) {
            x[0] = s;
            visit(std::uint64_t{0}, x);
        }
        return;
    }
    visit_level(1, s, 0, 0, x, visit);
}

void LayerWalker::advance() {
    for (auto idx : live_next_) mpz_set_ui(next_[idx].get_mpz_t(), 0);
    live_next_.clear();

    const auto k = bounds_.size();
    const auto s_next = static_cast<std::int64_t>(step_ + 1);
    for_each_point(s_next, [&](std::uint64_t idx, const std::vector<std::int64_t>& x) {
        mpz_ptr out = next_[idx].get_mpz_t();
        // Step in x_1: same flat index one layer back.
        mpz_set(out, current_[idx].get_mpz_t());
        for (std::size_t i = 1; i < k; ++i) {
            if (x[i] > 0) mpz_add(out, out, current_[idx - strides_[i]].get_mpz_t());
        }
        if (mpz_sgn(out) != 0) live_next_.push_back(idx);
    });

    std::swap(current_, next_);
    std::swap(live_current_, live_next_);
    ++step_;
}

mpz_class LayerWalker::count(std::span<const std::int64_t> point) const {
    if (point.size() != bounds_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the walker");
    }
    std::int64_t sum = 0;
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i] < 0 || point[i] > bounds_[i]) return 0;
        sum += point[i];
        if (i > 0) idx += static_cast<std::uint64_t>(point[i]) * strides_[i];
    }
    if (sum != static_cast<std::int64_t>(step_)) return 0;
    return current_[idx];
}

mpz_class LayerWalker::total() const {
    mpz_class sum = 0;
    for (auto idx : live_current_) sum += current_[idx];
    return sum;
}

Layer LayerWalker::snapshot() const {
    Layer layer;
    layer.step_count = step_;
    for_each_point(static_cast<std::int64_t>(step_), [&](std::uint64_t idx, const std::vector<std::int64_t>& x) {
        if (sgn(current_[idx]) != 0) layer.counts.emplace(x, current_[idx]);
    });
    return layer;
}

std::vector<std::int64_t> fixed_bounds(const WeightVector& weights, std::size_t n_max) {
    std::vector<std::int64_t> bounds;
    for (auto a : weights.entries()) bounds.push_back(a * static_cast<std::int64_t>(n_max));
    return bounds;
}

std::vector<std::int64_t> free_bounds(const WeightVector& weights, std::size_t n_max) {
    return free_bounds(weights.entries(), n_max);
}

std::vector<std::int64_t> free_bounds(std::span<const std::int64_t> weights, std::size_t n_max) {
    std::vector<std::int64_t> bounds;
    std::int64_t prefix = 0;
    for (auto a : weights) {
        prefix += a;
        // x_j >= (a_j / a_i) x_i for j < i, so n_max >= x_i * prefix / a_i.
        bounds.push_back(static_cast<std::int64_t>(n_max) * a / prefix);
    }
    return bounds;
}

Sequence enumerate_fixed(const WalkProblem& problem, std::size_t n_max, EnumeratorOptions options) {
    const auto& weights = problem.weights;
    LayerWalker walker(weights, fixed_bounds(weights, n_max), options);
    Sequence seq;
    seq.provenance = canonical_key(WalkProblem{weights, EndpointMode::Fixed});
    seq.terms.reserve(n_max + 1);
    seq.terms.emplace_back(1);

    const auto stride = static_cast<std::size_t>(weights.sum());
    LatticePoint target(weights.dimension());
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t s = 0; s < stride; ++s) walker.advance();
        for (std::size_t i = 0; i < target.size(); ++i) target[i] = weights[i] * static_cast<std::int64_t>(n);
        seq.terms.push_back(walker.count(target));
    }
    return seq;
}

Sequence enumerate_free(const WalkProblem& problem, std::size_t n_max, EnumeratorOptions options) {
    const auto& weights = problem.weights;
    LayerWalker walker(weights, free_bounds(weights, n_max), options);
    Sequence seq;
    seq.provenance = canonical_key(WalkProblem{weights, EndpointMode::Free});
    seq.terms.reserve(n_max + 1);
    seq.terms.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        walker.advance();
        seq.terms.push_back(walker.total());
    }
    return seq;
}

Sequence enumerate_free_coefficients(std::span<const std::int64_t> coefficients, std::size_t n_max,
                                     EnumeratorOptions options) {
    if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "coefficient list is empty");
    std::int64_t l = 1;
    for (auto c : coefficients) {
        if (c < 1) throw Error(ErrorCode::NonPositiveWeight, "coefficients must be >= 1");
        l = std::lcm(l, c);
    }
    std::vector<std::int64_t> weights;
    for (auto c : coefficients) weights.push_back(l / c);
    auto bounds = free_bounds(weights, n_max);
    auto walker = LayerWalker::chain(std::move(weights), std::move(bounds), options);

    Sequence seq;
    seq.provenance = "coefficients:" + format_weight_list(coefficients);
    seq.terms.reserve(n_max + 1);
    seq.terms.emplace_back(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        walker.advance();
        seq.terms.push_back(walker.total());
    }
    return seq;
}

Sequence enumerate(const WalkProblem& problem, std::size_t n_max, EnumeratorOptions options) {
    return problem.mode == EndpointMode::Fixed ? enumerate_fixed(problem, n_max, options)
                                               : enumerate_free(problem, n_max, options);
}

}  // namespace ballot
