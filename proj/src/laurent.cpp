#include "ktdual/laurent.hpp"

#include <sstream>

namespace ktdual {

LaurentPolynomial LaurentPolynomial::monomial(const VirtualCharacter& coeff, int exp) {
    LaurentPolynomial p(coeff.group());
    p.set_coeff(exp, coeff);
    return p;
}

int LaurentPolynomial::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

VirtualCharacter LaurentPolynomial::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? VirtualCharacter::zero(group_) : it->second;
}

void LaurentPolynomial::set_coeff(int e, VirtualCharacter c) {
    if (c.group() != group_) throw UserError("Laurent coefficient lives on the wrong group");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_.insert_or_assign(e, std::move(c));
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(group_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (group_ != o.group_) throw UserError("Laurent polynomials live on different groups");
    for (const auto& [e, c] : o.terms_) set_coeff(e, coeff(e) + c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    if (group_ != o.group_) throw UserError("Laurent polynomials live on different groups");
    LaurentPolynomial r(group_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const VirtualCharacter& s) {
    LaurentPolynomial r(group_);
    for (const auto& [e, c] : terms_) r.set_coeff(e, c * s);
    *this = std::move(r);
    return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r(group_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

std::string LaurentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        if (e != 0) {
            out << "*z";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::vector<VirtualCharacter> rewrite_in_y(const LaurentPolynomial& p) {
    if (p.min_exp() < 0)
        throw UserError("cannot rewrite a Laurent polynomial with negative z-powers in y directly");
    const GroupPtr& g = p.group();
    int deg = p.is_zero() ? 0 : p.max_exp();
    std::vector<VirtualCharacter> out(static_cast<size_t>(deg) + 1, VirtualCharacter::zero(g));
    // z^e = (1-y)^e expanded binomially
    for (const auto& [e, c] : p.terms()) {
        for (int j = 0; j <= e; ++j) {
            Rational b(binomial(e, j));
            if (j % 2 == 1) b = -b;
            out[static_cast<size_t>(j)] += c * Cyclotomic(b);
        }
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

LaurentPolynomial euler_class(const VirtualCharacter& v) {
    long n = genuine_dim(v);
    if (n < 1) throw UserError("Euler class needs a genuine representation of dimension >= 1");
    LaurentPolynomial chi(v.group());
    for (long i = 0; i <= n; ++i) {
        VirtualCharacter li = exterior(v, i);
        if (i % 2 == 1) li = -li;
        chi.set_coeff(static_cast<int>(i), std::move(li));
    }
    return chi;
}

} // namespace ktdual
