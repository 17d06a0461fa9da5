// One line per acceptance criterion; exits nonzero if any fails.
#include "jordalg/run.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace jordalg;

namespace {

// Every residual coefficient must vanish exactly; nothing is compared against a float.
constexpr long kTolerance = 0;
static_assert(kTolerance == 0);

struct Part {
    int N;
    std::string suite;
    std::vector<int> powers;
};

struct Criterion {
    int id;
    std::string name;
    std::vector<Part> parts;
};

std::vector<Criterion> criteria() {
    return {
        {1, "relation catalog N=3", {{3, "relations", {1, 2}}}},
        {2, "relation catalog N=4,5", {{4, "relations", {1, 2}}, {5, "relations", {1}}}},
        {3, "specialization consistency", {{3, "specialize", {1, 2}}, {4, "specialize", {1, 2}}}},
        {4, "hopf axioms N=3,4,5", {{3, "hopf", {1}}, {4, "hopf", {1}}, {5, "hopf", {1}}}},
        {5, "R-matrix N=3,4,5", {{3, "rmatrix", {1}}, {4, "rmatrix", {1}}, {5, "rmatrix", {1}}}},
        {6, "twist series N=3", {{3, "twist", {1}}}},
        {7, "contraction N=3", {{3, "contraction", {1}}}},
        {8, "irreps N=3", {{3, "irreps", {1}}}},
        {9, "classical limits", {{3, "limits", {1}}, {4, "limits", {1}}, {5, "limits", {1}}}},
    };
}

} // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        auto t0 = std::chrono::steady_clock::now();
        size_t failures = 0;
        std::vector<std::string> blocking;
        std::string error;
        try {
            for (const auto& p : c.parts) {
                RunConfig cfg;
                cfg.N = p.N;
                cfg.suites = {p.suite};
                cfg.tensor_powers = p.powers;
                CheckReport r = run_suite(p.suite, validate(cfg));
                failures += r.failures();
                for (const auto& e : r.entries)
                    if (e.blocking()) blocking.push_back("N=" + std::to_string(p.N) + " " + e.tag + "@" + e.representation);
            }
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = error.empty() && failures == 0;
        if (!pass) ++failed;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ")"
             << " tol=" << kTolerance << " failures=" << failures << " time=" << std::fixed << std::setprecision(2)
             << secs << "s";
        if (!error.empty()) line << " error: " << error;
        for (size_t k = 0; k < blocking.size() && k < 6; ++k) line << (k ? ", " : " blocking: ") << blocking[k];
        if (blocking.size() > 6) line << " (+" << blocking.size() - 6 << " more)";
        std::cout << line.str() << "\n";
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " of 9 criteria failed" : "acceptance: all criteria pass")
              << "\n";
    return failed ? 1 : 0;
}
