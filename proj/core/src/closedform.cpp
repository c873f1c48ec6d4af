#include "ballot/closedform.hpp"

#include <mutex>
#include <numeric>
#include <vector>

#include "ballot/error.hpp"

namespace ballot::closedform {

namespace {

class FactorialTable {
public:
    mpz_class get(std::uint64_t n) {
        std::lock_guard lock(mutex_);
        while (table_.size() <= n) {
            table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
        }
        return table_[n];
    }

private:
    std::mutex mutex_;
    std::vector<mpz_class> table_{mpz_class(1)};
};

FactorialTable& table() {
    static FactorialTable t;
    return t;
}

void require_nonnegative(std::span<const std::int64_t> xs, const char* what) {
    for (auto x : xs) {
        if (x < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " entries must be >= 0");
    }
}

mpz_class pow_si(std::int64_t base, std::int64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

mpz_class factorial(std::uint64_t n) { return table().get(n); }

mpz_class catalan(std::uint64_t n) {
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

mpz_class super_catalan(std::uint64_t k, std::uint64_t n) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "super_catalan needs k >= 1");
    mpz_class num = factorial(n * k);
    mpz_class den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= factorial(i);
        den *= factorial(n + i);
    }
    return num / den;
}

mpz_class discriminant(std::span<const std::int64_t> xs) {
    mpz_class d = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            d *= mpz_class(static_cast<long>(xs[i] - xs[j]));
        }
    }
    return d;
}

mpz_class walk_count(std::span<const std::int64_t> target) {
    require_nonnegative(target, "walk_count target");
    for (std::size_t i = 1; i < target.size(); ++i) {
        if (target[i] > target[i - 1]) {
            throw Error(ErrorCode::NotSorted, "walk_count target must be non-increasing");
        }
    }
    const auto k = static_cast<std::int64_t>(target.size());
    std::vector<std::int64_t> shifted(target.begin(), target.end());
    std::int64_t total = 0;
    mpz_class den = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        total += target[i];
        shifted[i] += k - 1 - i;
        den *= factorial(static_cast<std::uint64_t>(shifted[i]));
    }
    mpz_class num = discriminant(shifted) * factorial(static_cast<std::uint64_t>(total));
    return num / den;
}

mpz_class multinomial(std::span<const std::int64_t> counts) {
    require_nonnegative(counts, "multinomial");
    std::int64_t total = 0;
    mpz_class den = 1;
    for (auto c : counts) {
        total += c;
        den *= factorial(static_cast<std::uint64_t>(c));
    }
    return factorial(static_cast<std::uint64_t>(total)) / den;
}

mpq_class connective_constant_raw(std::span<const std::int64_t> weights) {
    for (auto w : weights) {
        if (w < 1) throw Error(ErrorCode::NonPositiveWeight, "connective constant needs positive weights");
    }
    const auto total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    mpz_class den = 1;
    for (auto w : weights) den *= pow_si(w, w);
    mpq_class mu(pow_si(total, total), den);
    mu.canonicalize();
    return mu;
}

mpq_class connective_constant(const WeightVector& weights) {
    return connective_constant_raw(weights.entries());
}

}  // namespace ballot::closedform
