#ifndef KTDUAL_ORACLE_HPP
#define KTDUAL_ORACLE_HPP

#include "ktdual/ktheory.hpp"

namespace ktdual {

struct OracleReport {
    std::string subject;
    bool matches = false;
    std::string lhs;
    std::string rhs;
    std::string detail;

    nlohmann::json to_json() const;
};

// Independent brute-force implementations used only by tests and the verify
// suites. They deliberately avoid the lambda-row recursion and the
// z-inverse formula of the main path: reduction is plain long division by
// the monic divisor y^n + sigma_1 y^{n-1} + ... + sigma_n, the shift by
// z^{-k} is undone with an inverse found by exact linear algebra, and the
// y-rewrite is Horner evaluation rather than a binomial expansion.

/// Remainder of p modulo chi(V(x)z), computed by fraction-free long
/// division in y. Must agree with ktheory::reduce everywhere.
KClass divide_reduce(const KContextPtr& ctx, const LaurentPolynomial& p);

/// prod_i (1 - alpha_i z) for 1-dimensional summands; equals the Euler
/// class of the direct sum.
LaurentPolynomial product_euler(const std::vector<VirtualCharacter>& summands);

/// Elementary symmetric polynomials in alpha_i^{-1} - 1 over the summands
/// of an abelian decomposable representation (the splitting-principle form
/// of the sigma coefficients).
std::vector<VirtualCharacter> elementary_symmetric_sigma(const VirtualCharacter& v);

/// Evaluates both sides at floating-point roots of unity on every class;
/// matches iff the max absolute difference is < 1e-9. Advisory only.
OracleReport numeric_crosscheck(const std::string& subject, const VirtualCharacter& lhs,
                                const VirtualCharacter& rhs);

/// Exact comparison packaged as a report (mismatch is data, not an error).
OracleReport exact_crosscheck(const std::string& subject, const VirtualCharacter& lhs,
                              const VirtualCharacter& rhs);

} // namespace ktdual

#endif
