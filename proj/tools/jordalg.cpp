#include "jordalg/contraction.hpp"
#include "jordalg/run.hpp"
#include "jordalg/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace jordalg;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int n = 3;
    std::vector<std::string> suites{"all"};
    std::string reps = "fund,fund2";
    std::string window = "-12:6";
    std::string variant;
    std::string format = "text";
    std::string output;
    bool timing = false;
    // emit
    std::string kind;
    std::string arb = "fund";
    // golden
    std::string golden;
    bool bless = false;
};

RunConfig to_config(const Options& o) {
    RunConfig c;
    c.N = o.n;
    c.suites.clear();
    for (const auto& s : o.suites) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) c.suites.push_back(item);
    }
    c.tensor_powers = parse_reps(o.reps);
    c.window = parse_window(o.window);
    c.leg = o.variant;
    return validate(c);
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << text;
}

bool all_pass(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) return false;
    return true;
}

std::string render(const std::vector<CheckReport>& rs, const std::string& format, bool timing) {
    if (format == "json") return reports_to_json(rs, timing).dump(2) + "\n";
    std::string out;
    for (const auto& r : rs) out += report_text(r);
    return out;
}

int cmd_verify(const Options& o) {
    RunConfig c = to_config(o);
    auto rs = run(c);
    write_out(render(rs, o.format, o.timing), o.output);
    return all_pass(rs) ? kExitPass : kExitFail;
}

int cmd_contract(const Options& o) {
    if (o.n != 3) throw ConfigError("the contraction is defined for N = 3 only");
    Options copy = o;
    copy.suites = {"contraction"};
    return cmd_verify(copy);
}

int cmd_emit(const Options& o) {
    RunConfig c = to_config(o);
    if (o.format == "text") throw ConfigError("emit writes json or latex");
    if (o.kind == "generators") {
        if (c.tensor_powers.size() != 1) throw ConfigError("emit generators takes a single --rep");
        DeformedGenerators g = build_deformed(c.N, c.tensor_powers.front());
        write_out(o.format == "json" ? rep_to_json(g.deformed).dump(2) + "\n" : rep_latex(g.deformed), o.output);
        return kExitPass;
    }
    if (o.kind == "rmatrix") {
        int k = parse_reps(o.arb).front();
        if (k > 2) throw ConfigError("--arb must be fund or fund2");
        TwistVariant v{o.variant.empty() ? select_twist_leg() : o.variant, kCrossAsWritten};
        Mat R = build_R(c.N, 1, k, v);
        write_out(o.format == "json" ? matrix_to_json(R).dump(2) + "\n" : matrix_latex(R) + "\n", o.output);
        return kExitPass;
    }
    throw ConfigError("emit needs generators or rmatrix");
}

int cmd_golden(const Options& o) {
    if (o.golden.empty()) throw ConfigError("--golden path is required");
    RunConfig c = to_config(o);
    auto rs = run(c);
    std::string text = reports_to_json(rs, false).dump(2) + "\n";
    if (o.bless) {
        write_out(text, o.golden);
        std::cout << "blessed " << o.golden << "\n";
        return kExitPass;
    }
    std::ifstream f(o.golden, std::ios::binary);
    if (!f) {
        std::cerr << "golden file " << o.golden << " is missing; rerun with --bless to create it\n";
        return kExitFail;
    }
    std::stringstream ss;
    ss << f.rdbuf();
    if (ss.str() == text) {
        std::cout << "golden match " << o.golden << "\n";
        return kExitPass;
    }
    std::cout << "golden mismatch " << o.golden << "\n";
    return kExitFail;
}

void common(CLI::App* sub, Options& o, bool with_format = true) {
    sub->add_option("--n", o.n, "rank parameter N of sl(N)");
    sub->add_option("--rep", o.reps, "comma list of fund, fund2, fund3");
    sub->add_option("--window", o.window, "Laurent window lo:hi for the contraction");
    sub->add_option("--variant", o.variant, "twist leg variant")->check(CLI::IsMember({"with-T", "plain"}));
    sub->add_option("--output", o.output, "write to this file instead of stdout");
    if (with_format) sub->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of jordanian sl(N) deformations"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "run check suites");
    common(verify, o);
    verify->add_option("--suite", o.suites, "suite names or all")->delimiter(',');
    verify->add_flag("--timing", o.timing, "include timings in json output");

    auto* contract = app.add_subcommand("contract", "q -> 1 contraction of R_q");
    common(contract, o);
    contract->add_flag("--compare-twist", "compare the limit with the twist-built R (always on)");

    auto* emit = app.add_subcommand("emit", "dump generators or R");
    common(emit, o);
    emit->add_option("kind", o.kind, "generators or rmatrix")->required()->check(CLI::IsMember({"generators", "rmatrix"}));
    emit->add_option("--arb", o.arb, "second slot for rmatrix: fund or fund2");

    auto* golden = app.add_subcommand("golden", "compare a canonical json report with a stored file");
    common(golden, o, false);
    golden->add_option("--suite", o.suites, "suite names or all")->delimiter(',');
    golden->add_option("--golden", o.golden, "golden file path")->required();
    golden->add_flag("--bless", o.bless, "rewrite the golden file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(o);
        if (contract->parsed()) return cmd_contract(o);
        if (emit->parsed()) {
            if (o.format == "text") o.format = "json";
            return cmd_emit(o);
        }
        if (golden->parsed()) return cmd_golden(o);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
