#pragma once

#include "jordalg/free_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace jordalg {

enum class Level { check, warn, info };

struct ResidualItem {
    size_t row = 0, col = 0;
    std::string poly;
};

struct ReportEntry {
    std::string tag;
    std::string representation;
    bool pass = true;
    std::vector<ResidualItem> residual_summary;
    std::string variant;
    Level level = Level::check;
    std::string note;

    // A failing check entry is what fails a run; warn and info never do.
    bool blocking() const { return level == Level::check && !pass; }
};

struct CheckReport {
    std::string suite;
    std::vector<ReportEntry> entries;
    std::map<std::string, std::string> config;
    double timing_ms = 0;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    void append(const CheckReport& other);
    bool passed() const;
    size_t failures() const;
    // Sort by tag/representation/variant so the output does not depend on evaluation order.
    void sort();
};

// Residual entry: pass iff every coefficient of every entry vanishes.
ReportEntry residual_entry(const std::string& tag, const std::string& rep, const Mat& residual,
                           Level level = Level::check, const std::string& variant = {});
// Residual restricted to powers h^0..h^max_degree.
ReportEntry truncated_residual_entry(const std::string& tag, const std::string& rep, const Mat& residual,
                                     unsigned max_degree, Level level = Level::check,
                                     const std::string& variant = {});
ReportEntry bool_entry(const std::string& tag, const std::string& rep, bool ok, const std::string& note,
                       Level level = Level::check, const std::string& variant = {});

std::string level_name(Level l);

} // namespace jordalg
