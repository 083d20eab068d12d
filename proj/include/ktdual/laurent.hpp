#ifndef KTDUAL_LAURENT_HPP
#define KTDUAL_LAURENT_HPP

#include <map>

#include "ktdual/repring.hpp"

namespace ktdual {

/// Element of R(G x T) = R(G)[z, z^{-1}]: finitely many terms, exponent of
/// the circle character z mapped to a coefficient in R(G).
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(GroupPtr group) : group_(std::move(group)) {}

    static LaurentPolynomial monomial(const VirtualCharacter& coeff, int exp);
    static LaurentPolynomial constant(const VirtualCharacter& coeff) { return monomial(coeff, 0); }
    static LaurentPolynomial one(const GroupPtr& g) { return constant(VirtualCharacter::trivial(g)); }

    const GroupPtr& group() const { return group_; }
    const std::map<int, VirtualCharacter>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const; // 0 for the zero polynomial
    int max_exp() const;
    /// Coefficient of z^e (zero character when absent).
    VirtualCharacter coeff(int e) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const VirtualCharacter& s);
    /// Multiplication by z^k.
    LaurentPolynomial shifted(int k) const;

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const VirtualCharacter& s) { return a *= s; }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    void set_coeff(int e, VirtualCharacter c);

    std::string str() const;

private:
    GroupPtr group_;
    std::map<int, VirtualCharacter> terms_;
};

/// Coefficients in y of p(z) under z = 1 - y, for polynomial p (min_exp >= 0).
/// Entry j is the coefficient of y^j.
std::vector<VirtualCharacter> rewrite_in_y(const LaurentPolynomial& p);

/// The K-theory Euler class of a genuine V tensored with the Bott class:
/// chi(V (x) z) = sum_{i=0}^{n} (-1)^i lambda^i(V) z^i.
LaurentPolynomial euler_class(const VirtualCharacter& v);

} // namespace ktdual

#endif
