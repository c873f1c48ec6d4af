#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ballot/real.hpp"
#include "ballot/walkmodel.hpp"

namespace ballot::asymptotics {

/// Fit log(mu) as an extra unknown alongside log C, theta and the corrections.
struct JointFit {};

/// Where the growth rate comes from: exact rational, a previously estimated
/// real, or a joint fit.
using MuSource = std::variant<mpq_class, Real, JointFit>;

/// Restrict the fit to indices n == residue (mod modulus).
struct Stratum {
    std::size_t modulus = 1;
    std::size_t residue = 0;
};

struct FitConfig {
    /// Number of 1/n^i correction terms; default min(10, window_end / 4).
    std::optional<std::size_t> correction_order;
    /// Largest index used; default the last available index.
    std::optional<std::size_t> window_end;
    /// Working precision in decimal digits.
    std::size_t precision = 400;
    MuSource mu = JointFit{};
    std::optional<Stratum> stratify;
    /// Run the 3x3 window/order grid that feeds stable_digits.
    bool diagnostics = true;
};

/// Result of fitting
///   log x(n) = log C + n log mu + theta log n + sum_{i=1..k} d_i / n^i
/// on the k+2 (or k+3 for a joint fit) largest admissible indices <= window_end.
/// The d_i are the log-linearised corrections: d_1 = c_1, d_2 = c_2 - c_1^2/2, ...
struct AsymptoticFit {
    Real theta;
    Real log_C;
    std::vector<Real> corrections;
    /// Exact rational when supplied, otherwise the fitted or estimated value.
    std::variant<mpq_class, Real> mu_used;
    std::size_t stable_digits = 0;

    /// Largest index actually sampled.
    std::size_t window_end = 0;
    std::size_t correction_order = 0;
    std::size_t precision = 0;
    std::optional<Stratum> stratum;
    /// theta for window ends {N, N-5, N-10} x orders {k-1, k, k+1}, row-major; empty when skipped.
    std::vector<std::optional<Real>> grid;
    /// Grid cells that could not be fitted.
    std::vector<std::string> notes;
};

/// Natural logs of positive terms; the fitting routines accept these directly so
/// that non-integer (e.g. rescaled or synthetic) data can be fitted.
struct LogSequence {
    std::size_t offset = 0;
    /// nullopt marks a term <= 0; sampling one is a NonpositiveTerm error.
    std::vector<std::optional<Real>> logs;
};

LogSequence log_terms(const Sequence& seq, std::size_t precision_digits);

/// Throws Error{NonpositiveTerm | InsufficientTerms | SingularSystem}.
AsymptoticFit fit(const Sequence& seq, const FitConfig& config);
AsymptoticFit fit(const LogSequence& logs, const FitConfig& config);

/// Limit of (x(n+m)/x(n))^(1/m): iterated Richardson extrapolation in 1/n of the
/// log-ratio samples from the last residue class, using up to `max_points` samples.
Real estimate_mu(const Sequence& seq, std::size_t stride, std::size_t precision_digits = 400,
                 std::size_t max_points = 10);
Real estimate_mu(const LogSequence& logs, std::size_t stride, std::size_t precision_digits = 400,
                 std::size_t max_points = 10);

/// One fit per residue class r = 0..modulus-1; `base.mu` is kept (JointFit by default).
std::vector<std::pair<std::size_t, AsymptoticFit>> stratified_exponents(const Sequence& seq, std::size_t modulus,
                                                                       FitConfig base = {});

/// Length of the common leading-digit prefix of the values rounded to 15 significant digits.
std::size_t common_leading_digits(std::span<const Real> values);

/// "p/q" (or "p") for exact rationals, "fitted:<decimal>" otherwise.
std::string format_mu(const std::variant<mpq_class, Real>& mu, std::size_t digits = 30);

}  // namespace ballot::asymptotics
