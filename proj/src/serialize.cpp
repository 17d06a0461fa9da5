#include "jordalg/serialize.hpp"

#include <sstream>

namespace jordalg {

Json poly_to_json(const ScalarPoly& p) { return Json(p.to_strings()); }

ScalarPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
    return ScalarPoly::from_strings(j.get<std::vector<std::string>>());
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat matrix_from_json(const Json& j) {
    try {
        size_t r = j.at("rows").get<size_t>(), c = j.at("cols").get<size_t>();
        const Json& e = j.at("entries");
        if (e.size() != r) throw ParseError("entries has " + std::to_string(e.size()) + " rows, expected " + std::to_string(r));
        Mat m(r, c);
        for (size_t i = 0; i < r; ++i) {
            if (e[i].size() != c) throw ParseError("row " + std::to_string(i) + " has the wrong length");
            for (size_t k = 0; k < c; ++k) m(i, k) = poly_from_json(e[i][k]);
        }
        return m;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(ex.what());
    }
}

Json rep_to_json(const Rep& rho) {
    Json out = Json::object();
    out["dim"] = rho.dim();
    Json gens = Json::object();
    for (const auto& [s, m] : rho.entries()) gens[s.name] = matrix_to_json(m);
    out["generators"] = std::move(gens);
    return out;
}

Json report_to_json(const CheckReport& r, bool with_timing) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json items = Json::array();
        for (const auto& it : e.residual_summary) items.push_back(Json{{"row", it.row}, {"col", it.col}, {"value", it.poly}});
        Json je{{"tag", e.tag},
                {"representation", e.representation},
                {"pass", e.pass},
                {"residual_summary", std::move(items)},
                {"variant", e.variant},
                {"level", level_name(e.level)}};
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(std::move(je));
    }
    Json out{{"suite", r.suite}, {"config", Json(r.config)}, {"failures", r.failures()}, {"entries", std::move(entries)}};
    if (with_timing) out["timing_ms"] = r.timing_ms;
    return out;
}

Json reports_to_json(const std::vector<CheckReport>& rs, bool with_timing) {
    Json arr = Json::array();
    size_t failures = 0;
    for (const auto& r : rs) {
        arr.push_back(report_to_json(r, with_timing));
        failures += r.failures();
    }
    return Json{{"failures", failures}, {"reports", std::move(arr)}};
}

std::string report_text(const CheckReport& r) {
    std::ostringstream os;
    size_t warns = 0;
    for (const auto& e : r.entries) {
        std::string status = e.pass ? "PASS" : (e.level == Level::check ? "FAIL" : e.level == Level::warn ? "WARN" : "NOTE");
        if (!e.pass && e.level == Level::warn) ++warns;
        os << status << "  " << e.tag << "  [" << e.representation << "]";
        if (!e.variant.empty()) os << "  {" << e.variant << "}";
        if (e.level != Level::check) os << "  (" << level_name(e.level) << ")";
        if (!e.note.empty()) os << "  " << e.note;
        os << "\n";
        if (!e.pass)
            for (const auto& it : e.residual_summary)
                os << "      (" << it.row + 1 << "," << it.col + 1 << "): " << it.poly << "\n";
    }
    os << "suite " << r.suite << ": " << r.entries.size() << " entries, " << r.failures() << " failing, " << warns
       << " warnings\n";
    return os.str();
}

namespace {

std::string rational_latex(const Rational& c) {
    if (c.denominator() == 1) return c.numerator().get_str();
    return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

} // namespace

std::string poly_latex(const ScalarPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rational& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        if (k == 0 || !mag.is_one()) os << rational_latex(mag);
        if (k >= 1) os << "h";
        if (k > 1) os << "^{" << k << "}";
    }
    return os.str();
}

std::string matrix_latex(const Mat& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " & " : "") << poly_latex(m(i, j));
        os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}";
    return os.str();
}

std::string rep_latex(const Rep& rho) {
    std::ostringstream os;
    for (const auto& [s, m] : rho.entries()) os << s.name << " = " << matrix_latex(m) << "\n\n";
    return os.str();
}

} // namespace jordalg
