#ifndef KTDUAL_SYMBOLIC_HPP
#define KTDUAL_SYMBOLIC_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ktdual/errors.hpp"

namespace ktdual {

/// Polynomial with integer coefficients in the abstract generators
/// L_1, ..., L_n standing for the exterior powers lambda^k(V*) of the dual
/// of a generic n-dimensional representation (L_1 = V*). Used to run the
/// reduction recursion once, before specializing any group, so the pairing
/// tables can be rendered in the paper's vocabulary.
class SymbolicPoly {
public:
    explicit SymbolicPoly(int nvars, long constant = 0);
    static SymbolicPoly generator(int nvars, int k); // L_k, 1 <= k <= nvars

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }

    SymbolicPoly operator-() const;
    SymbolicPoly& operator+=(const SymbolicPoly& o);
    SymbolicPoly& operator-=(const SymbolicPoly& o);
    SymbolicPoly& operator*=(const SymbolicPoly& o);

    friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly& b) { return a += b; }
    friend SymbolicPoly operator-(SymbolicPoly a, const SymbolicPoly& b) { return a -= b; }
    friend SymbolicPoly operator*(SymbolicPoly a, const SymbolicPoly& b) { return a *= b; }
    friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymbolicPoly& a, const SymbolicPoly& b) { return !(a == b); }

    /// Renders in the paper's style, constants first: "15 - 6V* + (V*)^2 - λ^2(V*)".
    std::string str(bool latex = false) const;

private:
    int nvars_;
    std::map<std::vector<int>, mpz_class> terms_;
};

/// A pairing-table entry: 1 when below the defining degree, otherwise
/// 1 - δ*(inner) with inner a polynomial in the L_k.
struct SymbolicEntry {
    bool is_one = true;
    SymbolicPoly inner;

    std::string str(bool latex = false) const;
    friend bool operator==(const SymbolicEntry& a, const SymbolicEntry& b) {
        if (a.is_one != b.is_one) return false;
        return a.is_one || a.inner == b.inner;
    }
    friend bool operator!=(const SymbolicEntry& a, const SymbolicEntry& b) { return !(a == b); }
};

/// The sigma coefficients, reduction recursion and pairing table of a
/// generic n-dimensional representation, everything expressed in the L_k.
class GenericTables {
public:
    explicit GenericTables(int n, long s_max = -1);

    int dim() const { return n_; }
    /// sigma_m, 1 <= m <= n, expanded in exterior powers of V*.
    const SymbolicPoly& sigma(int m) const { return sigma_[static_cast<size_t>(m - 1)]; }
    /// lambda_j^s coordinates of y^{n+s}.
    const std::vector<SymbolicPoly>& lambda_row(long s) const;
    /// 1 + lambda_{n-1}^0 + ... + lambda_{n-1}^{s-1}; eps(y^{n+s}) = 1 - δ*(this).
    SymbolicPoly epsilon_inner(long s) const;
    /// Entry (i,j) of the pairing table, 0 <= i, j < n.
    SymbolicEntry entry(int i, int j) const;
    std::vector<std::vector<SymbolicEntry>> table() const;

private:
    int n_;
    std::vector<SymbolicPoly> sigma_;
    mutable std::vector<std::vector<SymbolicPoly>> rows_;
};

} // namespace ktdual

#endif
