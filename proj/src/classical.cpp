#include "jordalg/classical.hpp"

namespace jordalg {

ClassicalData::ClassicalData(int n) : N(n) {
    if (n < 2) throw ConfigError("sl(N) needs N >= 2");
    cartan.assign(static_cast<size_t>(n - 1), std::vector<int>(static_cast<size_t>(n - 1), 0));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            int v = 0;
            if (i == j) v = 2;
            else if (i - j == 1 || j - i == 1) v = -1;
            cartan[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
        }
}

GenSymbol e_(int i) { return csym("e" + std::to_string(i)); }
GenSymbol f_(int i) { return csym("f" + std::to_string(i)); }
GenSymbol h_(int i) { return csym("h" + std::to_string(i)); }
GenSymbol root(int i, int j) { return csym("e" + std::to_string(i) + "_" + std::to_string(j)); }
GenSymbol e_long() { return csym("elong"); }
GenSymbol f_long() { return csym("flong"); }
GenSymbol h_sum() { return csym("hsum"); }

Mat unit_matrix(size_t n, int i, int j) {
    return Mat::unit(n, static_cast<size_t>(i - 1), static_cast<size_t>(j - 1));
}

std::vector<GenSymbol> classical_simple_symbols(int N) {
    std::vector<GenSymbol> s;
    for (int i = 1; i < N; ++i) {
        s.push_back(e_(i));
        s.push_back(f_(i));
        s.push_back(h_(i));
    }
    return s;
}

Rep fundamental_rep(int N) {
    ClassicalData check(N);
    size_t n = static_cast<size_t>(N);
    Rep rho(n);
    for (int i = 1; i < N; ++i) {
        rho.set(e_(i), unit_matrix(n, i, i + 1));
        rho.set(f_(i), unit_matrix(n, i + 1, i));
        rho.set(h_(i), unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
    }
    return rho;
}

Rep composite_roots(const Rep& rho, int N) {
    Rep out(rho.dim());
    for (const auto& s : classical_simple_symbols(N)) out.set(s, rho.at(s));
    for (int i = 1; i < N; ++i) {
        out.set(root(i, i + 1), rho.at(e_(i)));
        out.set(root(i + 1, i), rho.at(f_(i)));
    }
    for (int len = 2; len < N; ++len)
        for (int i = 1; i + len <= N; ++i) {
            int j = i + len;
            out.set(root(i, j), commutator(out.at(root(i, j - 1)), out.at(root(j - 1, j))));
            out.set(root(j, i), commutator(out.at(root(j, j - 1)), out.at(root(j - 1, i))));
        }
    Mat el = rho.at(e_(N - 1));
    for (int i = N - 2; i >= 1; --i) el = commutator(rho.at(e_(i)), el);
    out.set(e_long(), el);
    Mat fl = rho.at(f_(1));
    for (int i = 2; i < N; ++i) fl = commutator(rho.at(f_(i)), fl);
    out.set(f_long(), fl);
    Mat hs = rho.at(h_(1));
    for (int i = 2; i < N; ++i) hs += rho.at(h_(i));
    out.set(h_sum(), hs);
    return out;
}

Rep tensor_power_rep(const Rep& rho, int N, int k) {
    if (k < 1) throw ConfigError("tensor power must be positive");
    size_t n = rho.dim();
    size_t dim = 1;
    for (int j = 0; j < k; ++j) dim *= n;
    Rep out(dim);
    Mat id = Mat::identity(n);
    for (const auto& s : classical_simple_symbols(N)) {
        Mat sum(dim, dim);
        for (int slot = 0; slot < k; ++slot) {
            Mat term = slot == 0 ? rho.at(s) : id;
            for (int j = 1; j < k; ++j) term = kron(term, j == slot ? rho.at(s) : id);
            sum += term;
        }
        out.set(s, std::move(sum));
    }
    return composite_roots(out, N);
}

Rep classical_rep(int N, int k) {
    Rep f = fundamental_rep(N);
    return k == 1 ? composite_roots(f, N) : tensor_power_rep(f, N, k);
}

std::vector<ClassicalRelationResidual> classical_relation_residuals(const Rep& rho, int N) {
    ClassicalData cd(N);
    std::vector<ClassicalRelationResidual> out;
    auto tag = [](const std::string& a, int i, int j) {
        return a + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            const Mat &hi = rho.at(h_(i)), &hj = rho.at(h_(j)), &ei = rho.at(e_(i)), &ej = rho.at(e_(j)),
                      &fj = rho.at(f_(j));
            ScalarPoly a(cd.a(i, j));
            out.push_back({tag("[h,h]", i, j), commutator(hi, hj)});
            out.push_back({tag("[h,e]", i, j), commutator(hi, ej) - ej.scaled(a)});
            out.push_back({tag("[h,f]", i, j), commutator(hi, fj) + fj.scaled(a)});
            Mat ef = commutator(ei, fj);
            if (i == j) ef -= hi;
            out.push_back({tag("[e,f]", i, j), ef});
            if (i != j) {
                int reps = 1 - cd.a(i, j);
                Mat x = ej, y = rho.at(f_(j));
                for (int r = 0; r < reps; ++r) {
                    x = commutator(ei, x);
                    y = commutator(rho.at(f_(i)), y);
                }
                out.push_back({tag("serre-e", i, j), x});
                out.push_back({tag("serre-f", i, j), y});
            }
        }
    return out;
}

} // namespace jordalg
