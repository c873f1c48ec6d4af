#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ballot/asymptotics.hpp"
#include "ballot/guesser.hpp"
#include "ballot/walkmodel.hpp"

namespace ballot::seqio {

inline constexpr std::string_view kToolVersion = "ballot 1.0.0";

struct FitSummary {
    std::string theta;
    std::string log_C;
    std::vector<std::string> corrections;
    std::size_t stable_digits = 0;
    std::size_t precision = 0;
    std::size_t window_end = 0;
    std::size_t correction_order = 0;
    /// "r mod m" when the fit was restricted to a residue class.
    std::optional<std::string> stratum;

    bool operator==(const FitSummary&) const = default;
};

/// Coefficient lists (p_0 first, lowest degree first, decimal strings) or a
/// "not-found(L,D)" certificate.
using RecurrenceField = std::variant<std::monostate, std::vector<std::vector<std::string>>, std::string>;

/// One run: which problem, which terms, and what was concluded about them.
struct RunReport {
    std::string problem_key;
    std::optional<std::string> mode;  ///< "fixed" / "free"; absent for raw b-file input
    std::vector<std::int64_t> weights;
    std::size_t terms_count = 0;
    std::string terms_digest;
    std::optional<std::string> mu;
    std::optional<FitSummary> fit;
    RecurrenceField recurrence;
    std::string tool_version{kToolVersion};

    bool operator==(const RunReport&) const = default;
};

/// Significant digits used for decimal fields of a FitSummary.
inline constexpr std::size_t kSummaryDigits = 30;

FitSummary summarize(const asymptotics::AsymptoticFit& fit);
RecurrenceField serialize_recurrence(const Recurrence& rec);
std::string not_found_certificate(std::size_t max_order, std::size_t max_degree);

/// Pretty-printed JSON, trailing newline included; parse_report inverts it exactly.
std::string to_json(const RunReport& report);
/// Throws Error{MalformedLine} on schema violations.
RunReport parse_report(std::string_view text);

/// JSON array of reports, same layout rules as to_json.
std::string to_json(const std::vector<RunReport>& reports);
std::vector<RunReport> parse_reports(std::string_view text);

}  // namespace ballot::seqio
