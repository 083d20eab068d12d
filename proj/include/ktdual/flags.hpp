#ifndef KTDUAL_FLAGS_HPP
#define KTDUAL_FLAGS_HPP

#include "ktdual/ktheory.hpp"

namespace ktdual {

/// A complete flag of an abelian context: an ordering of the 1-dimensional
/// summands alpha_1, ..., alpha_n of V. Equivalent to a chain of
/// subrepresentations once multiplicities are fixed.
struct Flag {
    KContextPtr ctx;
    std::vector<VirtualCharacter> order;
};

/// Validates the group is abelian and the ordering is a permutation of the
/// summand multiset of V.
Flag make_flag(const KContextPtr& ctx, std::vector<VirtualCharacter> order);

/// The basis {1, y^{V^1}, ..., y^{V^{n-1}}}, where y^{V^i} is the product
/// of y^{alpha_j} = 1 - alpha_j z over the first i summands, reduced into
/// {y^j} coordinates.
std::vector<KClass> flag_basis(const Flag& f);

/// Coordinates of x in the flag basis (exact solve, pointwise per class).
std::vector<VirtualCharacter> flag_dual_coords(const Flag& f, const KClass& x);

/// The sum beta_0^F + ... + beta_{n-1}^F of the flag-dual basis, expressed
/// in beta^B coordinates. Flag-independent and equal to the fundamental
/// class (all-ones vector).
KHomologyClass flag_dual_sum(const Flag& f);

/// Determinant of the change of basis from flag a to flag b; a unit of R(A).
VirtualCharacter flag_change_determinant(const Flag& a, const Flag& b);

struct FlagIndependenceReport {
    long flag_count = 0;
    bool independent = false;
    std::vector<VirtualCharacter> sum_coords;
    std::string detail;

    nlohmann::json to_json() const;
};

/// Enumerates every distinct flag (permutations of equal summands
/// identified), checks all dual sums agree and equal (1, ..., 1).
FlagIndependenceReport verify_flag_independence(const KContextPtr& ctx);

/// All distinct summand orderings of the context's representation.
std::vector<Flag> enumerate_flags(const KContextPtr& ctx);

} // namespace ktdual

#endif
