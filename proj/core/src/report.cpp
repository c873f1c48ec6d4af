#include "ballot/report.hpp"

#include "json.hpp"

#include "ballot/error.hpp"

namespace ballot::seqio {

using nlohmann::ordered_json;

FitSummary summarize(const asymptotics::AsymptoticFit& fit) {
    FitSummary s;
    s.theta = fit.theta.to_scientific(kSummaryDigits);
    s.log_C = fit.log_C.to_scientific(kSummaryDigits);
    for (const auto& d : fit.corrections) s.corrections.push_back(d.to_scientific(kSummaryDigits));
    s.stable_digits = fit.stable_digits;
    s.precision = fit.precision;
    s.window_end = fit.window_end;
    s.correction_order = fit.correction_order;
    if (fit.stratum) {
        s.stratum = std::to_string(fit.stratum->residue) + " mod " + std::to_string(fit.stratum->modulus);
    }
    return s;
}

RecurrenceField serialize_recurrence(const Recurrence& rec) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : rec.coeffs) {
        auto& row = out.emplace_back();
        for (const auto& c : p) row.push_back(c.get_str());
    }
    return out;
}

std::string not_found_certificate(std::size_t max_order, std::size_t max_degree) {
    return "not-found(" + std::to_string(max_order) + "," + std::to_string(max_degree) + ")";
}

namespace {

ordered_json to_object(const RunReport& report) {
    ordered_json j;
    j["problem_key"] = report.problem_key;
    j["mode"] = report.mode ? ordered_json(*report.mode) : ordered_json(nullptr);
    j["weights"] = report.weights;
    j["terms_count"] = report.terms_count;
    j["terms_digest"] = report.terms_digest;
    j["mu"] = report.mu ? ordered_json(*report.mu) : ordered_json(nullptr);
    if (report.fit) {
        const auto& f = *report.fit;
        ordered_json fj;
        fj["theta"] = f.theta;
        fj["log_C"] = f.log_C;
        fj["corrections"] = f.corrections;
        fj["stable_digits"] = f.stable_digits;
        fj["precision"] = f.precision;
        fj["window_end"] = f.window_end;
        fj["correction_order"] = f.correction_order;
        fj["stratum"] = f.stratum ? ordered_json(*f.stratum) : ordered_json(nullptr);
        j["fit"] = std::move(fj);
    } else {
        j["fit"] = nullptr;
    }
    if (const auto* coeffs = std::get_if<std::vector<std::vector<std::string>>>(&report.recurrence)) {
        j["recurrence"] = *coeffs;
    } else if (const auto* cert = std::get_if<std::string>(&report.recurrence)) {
        j["recurrence"] = *cert;
    } else {
        j["recurrence"] = nullptr;
    }
    j["tool_version"] = report.tool_version;
    return j;
}

RunReport from_object(const ordered_json& j) {
    RunReport r;
    r.problem_key = j.at("problem_key").get<std::string>();
    if (!j.at("mode").is_null()) r.mode = j.at("mode").get<std::string>();
    r.weights = j.at("weights").get<std::vector<std::int64_t>>();
    r.terms_count = j.at("terms_count").get<std::size_t>();
    r.terms_digest = j.at("terms_digest").get<std::string>();
    if (!j.at("mu").is_null()) r.mu = j.at("mu").get<std::string>();
    if (const auto& fj = j.at("fit"); !fj.is_null()) {
        FitSummary f;
        f.theta = fj.at("theta").get<std::string>();
        f.log_C = fj.at("log_C").get<std::string>();
        f.corrections = fj.at("corrections").get<std::vector<std::string>>();
        f.stable_digits = fj.at("stable_digits").get<std::size_t>();
        f.precision = fj.at("precision").get<std::size_t>();
        f.window_end = fj.at("window_end").get<std::size_t>();
        f.correction_order = fj.at("correction_order").get<std::size_t>();
        if (!fj.at("stratum").is_null()) f.stratum = fj.at("stratum").get<std::string>();
        r.fit = std::move(f);
    }
    if (const auto& rj = j.at("recurrence"); rj.is_string()) {
        r.recurrence = rj.get<std::string>();
    } else if (rj.is_array()) {
        r.recurrence = rj.get<std::vector<std::vector<std::string>>>();
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
}

}  // namespace

std::string to_json(const RunReport& report) { return to_object(report).dump(2) + "\n"; }

std::string to_json(const std::vector<RunReport>& reports) {
    auto j = ordered_json::array();
    for (const auto& r : reports) j.push_back(to_object(r));
    return j.dump(2) + "\n";
}

RunReport parse_report(std::string_view text) {
    try {
        return from_object(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedLine, std::string("run report: ") + e.what());
    }
}

std::vector<RunReport> parse_reports(std::string_view text) {
    try {
        const auto j = ordered_json::parse(text);
        if (!j.is_array()) throw Error(ErrorCode::MalformedLine, "run reports: expected an array");
        std::vector<RunReport> out;
        for (const auto& item : j) out.push_back(from_object(item));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedLine, std::string("run report: ") + e.what());
    }
}

}  // namespace ballot::seqio
