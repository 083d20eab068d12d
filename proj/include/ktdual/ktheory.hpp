#ifndef KTDUAL_KTHEORY_HPP
#define KTDUAL_KTHEORY_HPP

#include <memory>
#include <mutex>

#include "ktdual/laurent.hpp"
#include "ktdual/linalg.hpp"

namespace ktdual {

class KContext;
using KContextPtr = std::shared_ptr<const KContext>;

using CharacterMatrix = std::vector<std::vector<VirtualCharacter>>;

/// The sigma coefficients of a genuine n-dimensional V: [sigma_1..sigma_n]
/// with sigma_m = sum_{t=0}^{m} (-1)^t C(n-m+t, n-m) lambda^{m-t}(V*),
/// so that det(V)^{-1} chi(V(x)z) = sigma_n + sigma_{n-1} y + ... + y^n.
std::vector<VirtualCharacter> sigma_coefficients(const VirtualCharacter& v);

/// Everything attached to the ring K^0_G(CP(V)) = R(G)[z]/chi(V(x)z) in the
/// basis {1, y, ..., y^{n-1}}, y = 1-z: the sigma coefficients, the unit
/// delta* = det(V)^{-1}, the reduction table for y^{n+s}, and the polynomial
/// representative of z^{-1}. Construction verifies the normalization
/// identity and the unit identity exactly. Immutable; the reduction table
/// grows on demand behind a lock with pure-function semantics.
class KContext : public std::enable_shared_from_this<KContext> {
public:
    static KContextPtr create(const VirtualCharacter& v, long s_max = -1);

    const GroupPtr& group() const { return group_; }
    const VirtualCharacter& rep() const { return v_; }
    int dim() const { return n_; }
    /// sigma_m for 1 <= m <= n.
    const VirtualCharacter& sigma(int m) const { return sigma_[static_cast<size_t>(m - 1)]; }
    const std::vector<VirtualCharacter>& sigmas() const { return sigma_; }
    /// delta* = det(V*) = det(V)^{-1}.
    const VirtualCharacter& det_inverse() const { return det_inv_; }

    /// Coordinates of y^{n+s} in {y^j}: lambda_row(s)[j] = lambda_j^s.
    /// Seeded by lambda_j^0 = -sigma_{n-j}, extended by
    /// lambda_j^{s+1} = lambda_{j-1}^s - lambda_{n-1}^s sigma_{n-j}.
    std::vector<VirtualCharacter> lambda_row(long s) const;

    /// Coordinates of z^{-1} = sum_{i=1..n} (-1)^{i+1} lambda^i(V) z^{i-1}
    /// rewritten in the y-basis.
    const std::vector<VirtualCharacter>& z_inverse_coords() const { return z_inv_; }

private:
    KContext(GroupPtr group, VirtualCharacter v, int n);

    GroupPtr group_;
    VirtualCharacter v_;
    int n_;
    std::vector<VirtualCharacter> sigma_;
    VirtualCharacter det_inv_;
    std::vector<VirtualCharacter> z_inv_;
    mutable std::mutex table_mu_;
    mutable std::vector<std::vector<VirtualCharacter>> table_; // row s -> lambda_j^s
};

/// Element of K^0_G(CP(V)) in the basis {1, y, ..., y^{n-1}}.
class KClass {
public:
    KClass(KContextPtr ctx, std::vector<VirtualCharacter> coords);

    static KClass zero(const KContextPtr& ctx);
    static KClass one(const KContextPtr& ctx);
    /// y^i for any i >= 0, reduced.
    static KClass y_power(const KContextPtr& ctx, long i);

    const KContextPtr& ctx() const { return ctx_; }
    const std::vector<VirtualCharacter>& coords() const { return coords_; }
    const VirtualCharacter& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
    bool is_zero() const;

    KClass operator-() const;
    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass& operator*=(const KClass& o);
    KClass& operator*=(const VirtualCharacter& s);

    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(KClass a, const KClass& b) { return a *= b; }
    friend KClass operator*(KClass a, const VirtualCharacter& s) { return a *= s; }
    friend KClass operator*(const VirtualCharacter& s, KClass a) { return a *= s; }
    friend bool operator==(const KClass& a, const KClass& b) {
        return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }

    std::string str() const;

private:
    KContextPtr ctx_;
    std::vector<VirtualCharacter> coords_;
};

/// Element of the K-homology K_0^G(CP(V)), modeled as the dual module in
/// the basis {beta_0^B, ..., beta_{n-1}^B} dual to {y^i}. The fundamental
/// class 1/chi(V(x)z) is the all-ones coordinate vector.
class KHomologyClass {
public:
    KHomologyClass(KContextPtr ctx, std::vector<VirtualCharacter> coords);

    const KContextPtr& ctx() const { return ctx_; }
    const std::vector<VirtualCharacter>& coords() const { return coords_; }

    friend bool operator==(const KHomologyClass& a, const KHomologyClass& b) {
        return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const KHomologyClass& a, const KHomologyClass& b) { return !(a == b); }

private:
    KContextPtr ctx_;
    std::vector<VirtualCharacter> coords_;
};

/// The augmentation eps(a_0 + a_1 y + ... + a_{n-1} y^{n-1}) = sum a_i,
/// i.e. evaluation against the fundamental class.
VirtualCharacter epsilon(const KClass& x);

/// Reduce coefficients of a y-polynomial of any degree into {y^j}.
KClass reduce_y_polynomial(const KContextPtr& ctx, std::vector<VirtualCharacter> ycoeffs);

/// Image of a Laurent polynomial in R(G)[z,z^{-1}]/chi(V(x)z). Negative
/// z-powers are cleared by the minimal shift z^k; z is a unit in the
/// quotient and the shift is undone with z_inverse_coords().
KClass reduce(const KContextPtr& ctx, const LaurentPolynomial& p);

/// The Poincare pairing <x,w> = eps(x w) (ceil-bracket of the dual basis).
VirtualCharacter pairing(const KClass& x, const KClass& w);

/// G_ij = pairing(y^i, y^j).
CharacterMatrix gram_matrix(const KContextPtr& ctx);

/// Kronecker evaluation <x, h> = sum_i x_i h_i.
VirtualCharacter kronecker(const KClass& x, const KHomologyClass& h);

/// Capping with the fundamental class: x -> (w -> eps(x w)), in beta^B
/// coordinates (G x_coords). poincare_dual(1) is the fundamental class.
KHomologyClass poincare_dual(const KClass& x);

struct PerfectionCertificate {
    bool perfect = false;
    CharacterMatrix inverse; // exact, entries certified in R(G) when perfect
    std::string detail;
};

/// Certifies that the pairing is perfect by producing an exact inverse of
/// the Gram matrix over R(G): solved pointwise per conjugacy class over the
/// cyclotomic field, then every entry passes the integrality test and
/// G * H = I is verified exactly. A failure would falsify the theorem.
PerfectionCertificate verify_perfect(const KContextPtr& ctx);

/// Coordinatewise restriction into the context of res(V).
KClass restrict_kclass(const KClass& x, const SubgroupEmbedding& e);
KHomologyClass restrict_khomology(const KHomologyClass& h, const SubgroupEmbedding& e);

/// Evaluate a class-function matrix at one conjugacy class.
linalg::Matrix<Cyclotomic> character_matrix_at_class(const CharacterMatrix& m, int c);

} // namespace ktdual

#endif
