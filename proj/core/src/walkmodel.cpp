#include "ballot/walkmodel.hpp"

#include <charconv>
#include <numeric>

#include "ballot/error.hpp"

namespace ballot {

std::int64_t WeightVector::sum() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

WeightVector validate(std::span<const std::int64_t> weights) {
    if (weights.empty()) {
        throw Error(ErrorCode::InvalidArgument, "weight list is empty");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1) {
            throw Error(ErrorCode::NonPositiveWeight,
                        "weight " + std::to_string(i + 1) + " is " + std::to_string(weights[i]) +
                            "; every weight must be >= 1");
        }
        if (i > 0 && weights[i] > weights[i - 1]) {
            throw Error(ErrorCode::NotSorted, "weights must be non-increasing, got " +
                                                  format_weight_list(weights));
        }
    }
    std::int64_t g = 0;
    std::int64_t l = 1;
    for (auto w : weights) {
        g = std::gcd(g, w);
        l = std::lcm(l, w);
    }
    if (g != 1) {
        throw Error(ErrorCode::NotCoprime, "weights " + format_weight_list(weights) +
                                               " have common divisor " + std::to_string(g));
    }
    return WeightVector({weights.begin(), weights.end()}, l);
}

WeightVector reciprocal_weights(const WeightVector& weights) {
    std::vector<std::int64_t> r;
    const auto entries = weights.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) r.push_back(weights.lcm() / *it);
    return validate(r);
}

bool admissible(const WeightVector& weights, std::span<const std::int64_t> point) {
    const auto k = weights.dimension();
    if (point.size() != k) {
        throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                      " coordinates, problem has " +
                                                      std::to_string(k));
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        // (M/a_i) x_i >= (M/a_{i+1}) x_{i+1}  <=>  a_{i+1} x_i >= a_i x_{i+1}
        if (weights[i + 1] * point[i] < weights[i] * point[i + 1]) return false;
    }
    return point[k - 1] >= 0;
}

std::string canonical_key(const WalkProblem& problem) {
    std::string key = problem.mode == EndpointMode::Fixed ? "F:" : "N:";
    key += format_weight_list(problem.weights.entries());
    return key;
}

WalkProblem parse_key(std::string_view key) {
    if (key.size() < 3 || key[1] != ':' || (key[0] != 'F' && key[0] != 'N')) {
        throw Error(ErrorCode::InvalidKey, "malformed problem key '" + std::string(key) + "'");
    }
    std::vector<std::int64_t> entries;
    try {
        entries = parse_weight_list(key.substr(2));
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidKey, "malformed problem key '" + std::string(key) + "'");
    }
    return WalkProblem{validate(entries), key[0] == 'F' ? EndpointMode::Fixed : EndpointMode::Free};
}

std::vector<std::int64_t> parse_weight_list(std::string_view text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::int64_t value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        if (!token.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw Error(ErrorCode::InvalidArgument, "cannot parse weight list '" + std::string(text) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_weight_list(std::span<const std::int64_t> weights) {
    std::string s;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights[i]);
    }
    return s;
}

}  // namespace ballot
