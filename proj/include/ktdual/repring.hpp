#ifndef KTDUAL_REPRING_HPP
#define KTDUAL_REPRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "ktdual/groups.hpp"

namespace ktdual {

/// A class function on a finite group with cyclotomic values, the working
/// representation of elements of R(G). Membership in R(G) ("is this a
/// virtual character?") is a test, not a constructor-time constraint:
/// intermediate quantities (Newton steps, Gram inverses before
/// certification) are plain class functions.
class VirtualCharacter {
public:
    VirtualCharacter(GroupPtr group, std::vector<Cyclotomic> values);

    static VirtualCharacter zero(const GroupPtr& g);
    static VirtualCharacter trivial(const GroupPtr& g);
    static VirtualCharacter irreducible(const GroupPtr& g, int index);
    static VirtualCharacter from_multiplicities(const GroupPtr& g, const std::vector<long>& mult);

    const GroupPtr& group() const { return group_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& value(int c) const { return values_[static_cast<size_t>(c)]; }
    bool is_zero() const;

    /// Value at the identity class.
    const Cyclotomic& dim() const;

    VirtualCharacter operator-() const;
    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    VirtualCharacter& operator*=(const VirtualCharacter& o); // tensor product
    VirtualCharacter& operator*=(const Cyclotomic& s);

    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    friend VirtualCharacter operator*(VirtualCharacter a, const VirtualCharacter& b) { return a *= b; }
    friend VirtualCharacter operator*(VirtualCharacter a, const Cyclotomic& s) { return a *= s; }
    friend VirtualCharacter operator*(const Cyclotomic& s, VirtualCharacter a) { return a *= s; }
    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);
    friend bool operator!=(const VirtualCharacter& a, const VirtualCharacter& b) { return !(a == b); }

    std::string str() const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
};

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b);

/// Composition with the inverse power map; complex conjugation on R(G).
VirtualCharacter dual(const VirtualCharacter& a);

/// Adams operation psi^k: value at c is a(class of g^k), k reduced mod the
/// exponent. psi^0 is dim(a) times the trivial character, psi^1 = id.
VirtualCharacter adams(const VirtualCharacter& a, long k);

/// Exterior power via Newton's identity
///   k lambda^k(a) = sum_{m=1..k} (-1)^{m-1} psi^m(a) lambda^{k-m}(a).
/// The division by k is asserted exact in R(G); failure is an InternalError.
VirtualCharacter exterior(const VirtualCharacter& a, long k);

/// lambda^n of a genuine character of dimension n >= 1: the determinant
/// character, a unit of R(G).
VirtualCharacter det_rep(const VirtualCharacter& v);

VirtualCharacter restrict_to(const VirtualCharacter& a, const SubgroupEmbedding& e);

/// (1/|G|) sum_c size(c) a(c) conj(b(c)).
Cyclotomic inner_product(const VirtualCharacter& a, const VirtualCharacter& b);

/// Inner products against every irreducible (rational for any class
/// function fixed by the ambient Galois action; integral iff a in R(G)).
std::vector<Cyclotomic> multiplicities(const VirtualCharacter& a);

/// Multiplicities as integers, when they all are (the R(G) membership test).
std::optional<std::vector<long>> integral_multiplicities(const VirtualCharacter& a);

bool is_virtual(const VirtualCharacter& a);
bool is_genuine(const VirtualCharacter& a);

/// Dimension of a genuine character (UserError when not genuine).
long genuine_dim(const VirtualCharacter& v);

/// For an abelian group: the multiset of 1-dimensional summands of a genuine
/// character, as irreducible characters repeated with multiplicity, in table
/// order. UserError on non-abelian groups or non-genuine input.
std::vector<VirtualCharacter> abelian_line_decomposition(const VirtualCharacter& v);

/// Parses "k*label" terms joined by '+' or '-', whitespace-insensitive,
/// labels resolved through FiniteGroupData::find_irreducible.
VirtualCharacter parse_rep(const GroupPtr& g, const std::string& spec);

void to_json(nlohmann::json& j, const VirtualCharacter& a);

} // namespace ktdual

#endif
