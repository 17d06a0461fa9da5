#include "jordalg/run.hpp"

#include "jordalg/contraction.hpp"
#include "jordalg/limits.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

namespace jordalg {

std::vector<std::string> known_suites() {
    return {"relations", "hopf", "rmatrix", "twist", "contraction", "specialize", "irreps", "limits"};
}

std::vector<std::string> suites_for(int N) {
    std::vector<std::string> s{"relations", "hopf", "rmatrix"};
    if (N == 3) {
        s.push_back("twist");
        s.push_back("contraction");
    }
    if (N == 3 || N == 4) s.push_back("specialize");
    if (N == 3) s.push_back("irreps");
    s.push_back("limits");
    return s;
}

int max_dimension() {
    const char* env = std::getenv("JORDALG_MAX_DIM");
    if (!env || !*env) return 8;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 3) throw ConfigError(std::string("JORDALG_MAX_DIM must be an integer >= 3, got ") + env);
    return static_cast<int>(v);
}

std::vector<int> parse_reps(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "fund") out.push_back(1);
        else if (item == "fund2") out.push_back(2);
        else if (item == "fund3") out.push_back(3);
        else throw ConfigError("unknown representation " + item + " (expected fund, fund2 or fund3)");
    }
    if (out.empty()) throw ConfigError("empty representation list");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Window parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("window must read lo:hi, got " + text);
    try {
        size_t a = 0, b = 0;
        std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
        Window w{std::stoi(lo, &a), std::stoi(hi, &b)};
        if (a != lo.size() || b != hi.size()) throw ConfigError("window must read lo:hi, got " + text);
        if (w.lo >= 0 || w.hi < 0) throw ConfigError("window must contain t^-1 and t^0");
        return w;
    } catch (const std::logic_error&) {
        throw ConfigError("window must read lo:hi, got " + text);
    }
}

RunConfig validate(RunConfig c) {
    if (c.N < 3) throw ConfigError("N must be at least 3");
    if (c.N > max_dimension())
        throw ConfigError("N = " + std::to_string(c.N) + " exceeds the size guard " + std::to_string(max_dimension()) +
                          " (set JORDALG_MAX_DIM to raise it)");
    if (c.suites.empty()) throw ConfigError("no suite selected");
    if (c.tensor_powers.empty()) throw ConfigError("no representation selected");
    if (!c.leg.empty() && c.leg != "with-T" && c.leg != "plain") throw ConfigError("variant must be with-T or plain");
    std::vector<std::string> expanded;
    for (const auto& s : c.suites) {
        if (s == "all") {
            for (const auto& x : suites_for(c.N)) expanded.push_back(x);
            continue;
        }
        auto known = known_suites();
        if (std::find(known.begin(), known.end(), s) == known.end()) throw ConfigError("unknown suite " + s);
        if ((s == "twist" || s == "contraction" || s == "irreps") && c.N != 3)
            throw ConfigError("suite " + s + " is defined for N = 3 only");
        if (s == "specialize" && c.N != 3 && c.N != 4) throw ConfigError("suite specialize needs N = 3 or 4");
        expanded.push_back(s);
    }
    std::vector<std::string> unique;
    for (const auto& s : expanded)
        if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
    c.suites = unique;
    return c;
}

CheckReport run_suite(const std::string& suite, const RunConfig& c) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r;
    if (suite == "relations") {
        r = run_catalog(c.N, c.tensor_powers);
        if (c.N == 3) r.append(automorphism_relation_check(c.tensor_powers));
    } else if (suite == "hopf") {
        r = run_hopf(c.N);
    } else if (suite == "rmatrix") {
        r = run_rmatrix(c.N, c.leg);
    } else if (suite == "twist") {
        r = check_twist_G();
    } else if (suite == "contraction") {
        r = run_contraction(c.window, {c.window.lo - 4, c.window.hi + 4}, c.leg);
    } else if (suite == "specialize") {
        r = specialize_check(c.N, c.tensor_powers);
    } else if (suite == "irreps") {
        r = irreps_check();
    } else if (suite == "limits") {
        r = classical_limits(c.N);
    } else {
        throw ConfigError("unknown suite " + suite);
    }
    r.suite = suite;
    r.config["N"] = std::to_string(c.N);
    std::string reps;
    for (int k : c.tensor_powers) reps += (reps.empty() ? "" : ",") + rep_name(k);
    r.config["reps"] = reps;
    if (!c.leg.empty()) r.config["variant"] = c.leg;
    r.sort();
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CheckReport> run(const RunConfig& c) {
    RunConfig v = validate(c);
    std::vector<CheckReport> out;
    for (const auto& s : v.suites) out.push_back(run_suite(s, v));
    return out;
}

} // namespace jordalg
