#include "jordalg/report.hpp"

#include <algorithm>
#include <tuple>

namespace jordalg {

namespace {
// Residual dumps are capped so a badly broken identity does not flood the report.
constexpr size_t kMaxResidualItems = 12;
} // namespace

void CheckReport::append(const CheckReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    timing_ms += other.timing_ms;
}

bool CheckReport::passed() const { return failures() == 0; }

size_t CheckReport::failures() const {
    return static_cast<size_t>(std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.blocking(); }));
}

void CheckReport::sort() {
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        return std::tie(a.tag, a.representation, a.variant) < std::tie(b.tag, b.representation, b.variant);
    });
}

ReportEntry residual_entry(const std::string& tag, const std::string& rep, const Mat& residual, Level level,
                           const std::string& variant) {
    ReportEntry e{tag, rep, true, {}, variant, level, {}};
    size_t count = 0;
    for (const auto& nz : nonzero_entries(residual)) {
        ++count;
        if (e.residual_summary.size() < kMaxResidualItems) e.residual_summary.push_back({nz.row, nz.col, nz.value.str()});
    }
    e.pass = count == 0;
    if (count > kMaxResidualItems) e.note = std::to_string(count) + " nonzero entries, first " +
                                            std::to_string(kMaxResidualItems) + " shown";
    return e;
}

ReportEntry truncated_residual_entry(const std::string& tag, const std::string& rep, const Mat& residual,
                                     unsigned max_degree, Level level, const std::string& variant) {
    return residual_entry(tag, rep, residual.map([&](const ScalarPoly& p) { return p.truncated(max_degree); }), level,
                          variant);
}

ReportEntry bool_entry(const std::string& tag, const std::string& rep, bool ok, const std::string& note, Level level,
                       const std::string& variant) {
    ReportEntry e{tag, rep, ok, {}, variant, level, note};
    if (!ok) e.residual_summary.push_back({0, 0, note.empty() ? "failed" : note});
    return e;
}

std::string level_name(Level l) {
    switch (l) {
    case Level::check: return "check";
    case Level::warn: return "warn";
    case Level::info: return "info";
    }
    return "check";
}

} // namespace jordalg
