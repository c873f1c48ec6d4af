#include "ballot/asymptotics.hpp"

#include <algorithm>

#include "ballot/error.hpp"

namespace ballot::asymptotics {

namespace {

using Matrix = std::vector<std::vector<Real>>;

// Gaussian elimination with partial pivoting; overwrites a and b, returns the solution.
std::vector<Real> solve(Matrix a, std::vector<Real> b) {
    const auto n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        Real best = abs(a[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            Real cand = abs(a[r][col]);
            if (best < cand) {
                best = std::move(cand);
                pivot = r;
            }
        }
        if (best.is_zero()) {
            throw Error(ErrorCode::SingularSystem, "no non-zero pivot in column " + std::to_string(col));
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Real factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Real> x(n, Real(b[0].precision()));
    for (std::size_t i = n; i-- > 0;) {
        Real acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

std::size_t default_order(std::size_t window_end) { return std::min<std::size_t>(10, window_end / 4); }

struct SingleFit {
    Real theta;
    Real log_C;
    std::vector<Real> corrections;
    std::optional<Real> log_mu;
    std::size_t last_sample = 0;
};

const Real& sampled_log(const LogSequence& logs, std::size_t n) {
    const auto& entry = logs.logs[n - logs.offset];
    if (!entry) throw Error(ErrorCode::NonpositiveTerm, "term at n=" + std::to_string(n) + " is not positive");
    return *entry;
}

// Largest `count` indices <= window_end, >= max(offset, 1), congruent to the stratum.
std::vector<std::size_t> sample_indices(const LogSequence& logs, std::size_t window_end, std::size_t count,
                                        const std::optional<Stratum>& stratum) {
    const std::size_t modulus = stratum ? stratum->modulus : 1;
    const std::size_t residue = stratum ? stratum->residue % modulus : 0;
    const std::size_t lowest = std::max<std::size_t>(logs.offset, 1);
    std::vector<std::size_t> out;
    if (window_end < lowest) return out;
    std::size_t n = window_end;
    while (n % modulus != residue) {
        if (n == 0) return out;
        --n;
    }
    while (out.size() < count && n >= lowest) {
        out.push_back(n);
        if (n < modulus) break;
        n -= modulus;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SingleFit fit_once(const LogSequence& logs, std::size_t window_end, std::size_t order, const MuSource& mu,
                   const std::optional<Stratum>& stratum, mpfr_prec_t bits) {
    const bool joint = std::holds_alternative<JointFit>(mu);
    const std::size_t unknowns = order + 2 + (joint ? 1 : 0);
    if (logs.logs.empty() || window_end > logs.offset + logs.logs.size() - 1) {
        throw Error(ErrorCode::InsufficientTerms, "window end " + std::to_string(window_end) +
                                                      " lies beyond the available terms");
    }
    const auto samples = sample_indices(logs, window_end, unknowns, stratum);
    if (samples.size() < unknowns) {
        throw Error(ErrorCode::InsufficientTerms, "need " + std::to_string(unknowns) + " sample indices <= " +
                                                      std::to_string(window_end) + ", have " +
                                                      std::to_string(samples.size()));
    }

    std::optional<Real> log_mu;
    if (const auto* q = std::get_if<mpq_class>(&mu)) {
        if (sgn(*q) <= 0) throw Error(ErrorCode::InvalidArgument, "mu must be positive");
        log_mu = log(Real(*q, bits));
    } else if (const auto* r = std::get_if<Real>(&mu)) {
        Real widened(bits);
        mpfr_set(widened.get(), r->get(), MPFR_RNDN);
        if (widened.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "mu must be positive");
        log_mu = log(widened);
    }

    Matrix a;
    std::vector<Real> b;
    for (auto n : samples) {
        const Real nr(static_cast<long>(n), bits);
        const Real inv = Real(1L, bits) / nr;
        std::vector<Real> row;
        row.reserve(unknowns);
        row.emplace_back(1L, bits);
        row.push_back(log(nr));
        Real power = inv;
        for (std::size_t i = 0; i < order; ++i) {
            row.push_back(power);
            power *= inv;
        }
        if (joint) row.push_back(nr);
        a.push_back(std::move(row));

        Real y(bits);
        mpfr_set(y.get(), sampled_log(logs, n).get(), MPFR_RNDN);
        if (log_mu) y -= nr * *log_mu;
        b.push_back(std::move(y));
    }

    auto x = solve(std::move(a), std::move(b));
    SingleFit out{x[1], x[0], {}, std::nullopt, samples.back()};
    for (std::size_t i = 0; i < order; ++i) out.corrections.push_back(x[2 + i]);
    if (joint) out.log_mu = x[2 + order];
    return out;
}

}  // namespace

LogSequence log_terms(const Sequence& seq, std::size_t precision_digits) {
    const auto bits = digits_to_bits(precision_digits);
    LogSequence out;
    out.offset = seq.offset;
    out.logs.reserve(seq.size());
    for (const auto& t : seq.terms) {
        if (sgn(t) > 0) {
            out.logs.emplace_back(log(t, bits));
        } else {
            out.logs.emplace_back(std::nullopt);
        }
    }
    return out;
}

std::size_t common_leading_digits(std::span<const Real> values) {
    if (values.empty()) return 0;
    auto mantissa = [](const Real& v) {
        const auto text = v.to_scientific(15);
        const auto e = text.find('e');
        std::string digits;
        for (std::size_t i = 0; i < e; ++i) {
            if (text[i] >= '0' && text[i] <= '9') digits += text[i];
        }
        const bool negative = !text.empty() && text[0] == '-';
        return std::make_tuple(negative, text.substr(e), digits);
    };
    const auto [neg0, exp0, digits0] = mantissa(values[0]);
    std::size_t common = digits0.size();
    for (std::size_t i = 1; i < values.size(); ++i) {
        const auto [neg, ex, digits] = mantissa(values[i]);
        if (neg != neg0 || ex != exp0) return 0;
        std::size_t j = 0;
        while (j < common && j < digits.size() && digits[j] == digits0[j]) ++j;
        common = j;
    }
    return common;
}

AsymptoticFit fit(const Sequence& seq, const FitConfig& config) {
    return fit(log_terms(seq, config.precision), config);
}

AsymptoticFit fit(const LogSequence& logs, const FitConfig& config) {
    if (logs.logs.empty()) throw Error(ErrorCode::InsufficientTerms, "empty sequence");
    const auto bits = digits_to_bits(config.precision);
    const std::size_t last = logs.offset + logs.logs.size() - 1;
    const std::size_t window_end = config.window_end.value_or(last);
    const std::size_t order = config.correction_order.value_or(default_order(window_end));

    auto main = fit_once(logs, window_end, order, config.mu, config.stratify, bits);

    AsymptoticFit result{main.theta, main.log_C, main.corrections, mpq_class(0), 0, main.last_sample, order,
                         config.precision, config.stratify, {}, {}};
    if (main.log_mu) {
        result.mu_used = exp(*main.log_mu);
    } else if (const auto* q = std::get_if<mpq_class>(&config.mu)) {
        result.mu_used = *q;
    } else {
        result.mu_used = std::get<Real>(config.mu);
    }

    if (!config.diagnostics) {
        result.stable_digits = common_leading_digits(std::span<const Real>(&result.theta, 1));
        return result;
    }

    // Grid rows: window ends N, N-5, N-10; columns: orders k-1, k, k+1.
    std::vector<Real> agreed;
    for (std::size_t back : {0, 5, 10}) {
        for (int delta : {-1, 0, 1}) {
            const long cell_order = static_cast<long>(order) + delta;
            const std::string where = "window_end=" + (window_end >= back ? std::to_string(window_end - back)
                                                                             : std::string("<0")) +
                                      " order=" + std::to_string(cell_order);
            if (cell_order < 0 || window_end < back) {
                result.grid.emplace_back(std::nullopt);
                result.notes.push_back(where + ": skipped");
                continue;
            }
            if (back == 0 && delta == 0) {
                result.grid.emplace_back(result.theta);
                agreed.push_back(result.theta);
                continue;
            }
            try {
                auto cell = fit_once(logs, window_end - back, static_cast<std::size_t>(cell_order), config.mu,
                                     config.stratify, bits);
                agreed.push_back(cell.theta);
                result.grid.emplace_back(std::move(cell.theta));
            } catch (const Error& e) {
                result.grid.emplace_back(std::nullopt);
                result.notes.push_back(where + ": " + std::string(to_string(e.code())));
            }
        }
    }
    result.stable_digits = common_leading_digits(agreed);
    return result;
}

Real estimate_mu(const Sequence& seq, std::size_t stride, std::size_t precision_digits, std::size_t max_points) {
    return estimate_mu(log_terms(seq, precision_digits), stride, precision_digits, max_points);
}

Real estimate_mu(const LogSequence& logs, std::size_t stride, std::size_t precision_digits, std::size_t max_points) {
    if (stride == 0) throw Error(ErrorCode::InvalidArgument, "stride must be >= 1");
    const auto bits = digits_to_bits(precision_digits);
    if (logs.logs.size() <= stride) throw Error(ErrorCode::InsufficientTerms, "too few terms for a ratio");
    const std::size_t last = logs.offset + logs.logs.size() - 1;
    const std::size_t lowest = std::max<std::size_t>(logs.offset, 1);

    // Ratio samples rho(n) = (log x(n+m) - log x(n)) / m for n = last-m, last-2m, ...
    std::vector<Real> h;
    std::vector<Real> rho;
    const Real m(static_cast<long>(stride), bits);
    for (std::size_t n = last - stride; n >= lowest && rho.size() < max_points; n -= stride) {
        Real num(bits);
        mpfr_set(num.get(), sampled_log(logs, n + stride).get(), MPFR_RNDN);
        num -= sampled_log(logs, n);
        rho.push_back(num / m);
        h.push_back(Real(1L, bits) / Real(static_cast<long>(n), bits));
        if (n < stride) break;
    }
    if (rho.size() < 4) {
        throw Error(ErrorCode::InsufficientTerms,
                    "need at least 4 ratio samples, have " + std::to_string(rho.size()));
    }

    // Neville tableau evaluated at h = 0.
    auto p = rho;
    const auto count = p.size();
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = 0; i + level < count; ++i) {
            // p_i <- (h_i p_{i+1} - h_{i+level} p_i) / (h_i - h_{i+level})
            p[i] = (h[i] * p[i + 1] - h[i + level] * p[i]) / (h[i] - h[i + level]);
        }
    }
    return exp(p[0]);
}

std::vector<std::pair<std::size_t, AsymptoticFit>> stratified_exponents(const Sequence& seq, std::size_t modulus,
                                                                       FitConfig base) {
    if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 1");
    const auto logs = log_terms(seq, base.precision);
    std::vector<std::pair<std::size_t, AsymptoticFit>> out;
    for (std::size_t r = 0; r < modulus; ++r) {
        FitConfig config = base;
        config.stratify = Stratum{modulus, r};
        out.emplace_back(r, fit(logs, config));
    }
    return out;
}

std::string format_mu(const std::variant<mpq_class, Real>& mu, std::size_t digits) {
    if (const auto* q = std::get_if<mpq_class>(&mu)) return q->get_str();
    return "fitted:" + std::get<Real>(mu).to_scientific(digits);
}

}  // namespace ballot::asymptotics
