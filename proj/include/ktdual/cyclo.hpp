#ifndef KTDUAL_CYCLO_HPP
#define KTDUAL_CYCLO_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ktdual/rational.hpp"

namespace ktdual {

/// An element of the cyclotomic field Q(zeta_N), stored as a polynomial in
/// zeta_N of degree < phi(N), reduced modulo the N-th cyclotomic polynomial.
/// All arithmetic is exact. Values are kept in canonical form: the conductor
/// is the smallest N such that the value lies in Q(zeta_N), so equality is
/// componentwise. Immutable in practice; every operation returns a new value.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}
    Cyclotomic(const Rational& v) : conductor_(1), coeffs_{v} {}

    /// zeta_n^k, reduced.
    static Cyclotomic zeta(long n, long k = 1);

    /// Construct from a coefficient polynomial in zeta_n (any degree); the
    /// value is reduced mod Phi_n and the conductor normalized downward.
    static Cyclotomic from_polynomial(long n, std::vector<Rational> coeffs);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// The rational value if the element lies in Q, empty otherwise.
    std::optional<Rational> as_rational() const;
    bool is_rational() const { return conductor_ == 1; }
    /// True when the value is a rational integer.
    bool is_integer() const;

    /// Complex conjugate (the Galois automorphism zeta -> zeta^{-1}).
    Cyclotomic conj() const;
    /// Multiplicative inverse; throws UserError on zero.
    Cyclotomic inverse() const;

    /// Numeric evaluation at zeta_N = e^{2 pi i / N}; cross-checks only.
    std::complex<double> evalf() const;

    std::string str() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    long conductor_;
    std::vector<Rational> coeffs_; // size phi(conductor_)

    Cyclotomic(long conductor, std::vector<Rational> reduced, bool /*tag*/)
        : conductor_(conductor), coeffs_(std::move(reduced)) {}
};

/// Coefficients of the n-th cyclotomic polynomial Phi_n (ascending, monic).
const std::vector<Rational>& cyclotomic_polynomial(long n);

long euler_phi(long n);
std::vector<long> divisors(long n);

void to_json(nlohmann::json& j, const Cyclotomic& c);
void from_json(const nlohmann::json& j, Cyclotomic& c);

} // namespace ktdual

#endif
