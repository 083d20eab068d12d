#include "ktdual/symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "ktdual/rational.hpp"

namespace ktdual {

SymbolicPoly::SymbolicPoly(int nvars, long constant) : nvars_(nvars) {
    if (nvars < 0) throw UserError("negative variable count");
    if (constant != 0) terms_.emplace(std::vector<int>(static_cast<size_t>(nvars), 0), mpz_class(constant));
}

SymbolicPoly SymbolicPoly::generator(int nvars, int k) {
    if (k < 1 || k > nvars) throw UserError("generator index out of range");
    SymbolicPoly p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(k - 1)] = 1;
    p.terms_.emplace(std::move(e), mpz_class(1));
    return p;
}

bool SymbolicPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](int e) { return e == 0; });
}

SymbolicPoly SymbolicPoly::operator-() const {
    SymbolicPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& o) {
    if (nvars_ != o.nvars_) throw UserError("symbolic polynomials in different rings");
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SymbolicPoly& SymbolicPoly::operator-=(const SymbolicPoly& o) { return *this += -o; }

SymbolicPoly& SymbolicPoly::operator*=(const SymbolicPoly& o) {
    if (nvars_ != o.nvars_) throw UserError("symbolic polynomials in different rings");
    SymbolicPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(e), c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    *this = std::move(r);
    return *this;
}

namespace {

SymbolicPoly scaled(const SymbolicPoly& p, const mpz_class& c) {
    if (!mpz_fits_slong_p(c.get_mpz_t())) throw InternalError("symbolic constant out of range");
    return p * SymbolicPoly(p.nvars(), c.get_si());
}

std::string monomial_str(const std::vector<int>& e, bool latex) {
    std::ostringstream out;
    for (size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        std::string base;
        if (k == 0) {
            base = latex ? "V^*" : "V*";
            if (e[k] > 1) base = "(" + base + ")";
        } else {
            base = latex ? "\\lambda^" + std::to_string(k + 1) + "(V^*)"
                         : "λ^" + std::to_string(k + 1) + "(V*)";
            if (e[k] > 1) base = "(" + base + ")";
        }
        out << base;
        if (e[k] > 1) out << "^" << e[k];
    }
    return out.str();
}

} // namespace

std::string SymbolicPoly::str(bool latex) const {
    if (terms_.empty()) return "0";
    // paper order: constants first, then V* powers, then higher lambdas
    std::vector<const std::pair<const std::vector<int>, mpz_class>*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
        const auto& ea = a->first;
        const auto& eb = b->first;
        for (size_t i = ea.size(); i-- > 0;)
            if (ea[i] != eb[i]) return ea[i] < eb[i];
        return false;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : sorted) {
        const mpz_class& c = t->second;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono = monomial_str(t->first, latex);
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str();
            out << mono;
        }
    }
    return out.str();
}

std::string SymbolicEntry::str(bool latex) const {
    if (is_one) return "1";
    std::string ds = latex ? "\\delta^*" : "δ*";
    if (inner.is_zero()) return "1";
    if (inner == SymbolicPoly(inner.nvars(), 1)) return "1 - " + ds;
    return "1 - " + ds + "(" + inner.str(latex) + ")";
}

GenericTables::GenericTables(int n, long s_max) : n_(n) {
    if (n < 1) throw UserError("generic table dimension must be >= 1");
    // sigma_m = sum_{t=0..m} (-1)^t C(n-m+t, n-m) L_{m-t}, with L_0 = 1
    for (int m = 1; m <= n; ++m) {
        SymbolicPoly acc(n);
        for (int t = 0; t <= m; ++t) {
            mpz_class c = binomial(n - m + t, n - m);
            if (t % 2 == 1) c = -c;
            SymbolicPoly term = (m - t == 0) ? SymbolicPoly(n, 1) : SymbolicPoly::generator(n, m - t);
            acc += scaled(term, c);
        }
        sigma_.push_back(std::move(acc));
    }
    std::vector<SymbolicPoly> row0;
    for (int j = 0; j < n; ++j) row0.push_back(-sigma_[static_cast<size_t>(n - 1 - j)]);
    rows_.push_back(std::move(row0));
    if (s_max < 0) s_max = std::max(2L * n, 8L);
    lambda_row(s_max);
}

const std::vector<SymbolicPoly>& GenericTables::lambda_row(long s) const {
    if (s < 0) throw UserError("lambda row index must be non-negative");
    while (static_cast<long>(rows_.size()) <= s) {
        const auto& prev = rows_.back();
        std::vector<SymbolicPoly> next;
        next.reserve(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            SymbolicPoly val = -(prev[static_cast<size_t>(n_ - 1)] * sigma_[static_cast<size_t>(n_ - 1 - j)]);
            if (j > 0) val += prev[static_cast<size_t>(j - 1)];
            next.push_back(std::move(val));
        }
        rows_.push_back(std::move(next));
    }
    return rows_[static_cast<size_t>(s)];
}

SymbolicPoly GenericTables::epsilon_inner(long s) const {
    SymbolicPoly acc(n_, 1);
    for (long t = 0; t < s; ++t) acc += lambda_row(t)[static_cast<size_t>(n_ - 1)];
    return acc;
}

SymbolicEntry GenericTables::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw UserError("table entry out of range");
    SymbolicEntry e{true, SymbolicPoly(n_)};
    if (i + j < n_) return e;
    e.is_one = false;
    e.inner = epsilon_inner(i + j - n_);
    return e;
}

std::vector<std::vector<SymbolicEntry>> GenericTables::table() const {
    std::vector<std::vector<SymbolicEntry>> t(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[static_cast<size_t>(i)].push_back(entry(i, j));
    return t;
}

} // namespace ktdual
