#pragma once

#include "jordalg/laurent.hpp"
#include "jordalg/report.hpp"

#include <string>
#include <vector>

namespace jordalg {

struct RunConfig {
    int N = 3;
    std::vector<std::string> suites{"all"};
    std::vector<int> tensor_powers{1, 2};  // fund = 1, fund2 = 2, fund3 = 3
    Window window{};
    std::string leg;  // empty: selected by the twist reconciliation
};

std::vector<std::string> known_suites();
// Suites that apply to N, in run order.
std::vector<std::string> suites_for(int N);

// Largest N accepted; JORDALG_MAX_DIM overrides the default of 8.
int max_dimension();

// "fund,fund2" -> {1, 2}.
std::vector<int> parse_reps(const std::string& text);
// "-12:6" -> {-12, 6}.
Window parse_window(const std::string& text);

// Throws ConfigError on an invalid or oversized request; expands "all".
RunConfig validate(RunConfig c);

CheckReport run_suite(const std::string& suite, const RunConfig& c);
std::vector<CheckReport> run(const RunConfig& c);

} // namespace jordalg
