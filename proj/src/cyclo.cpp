#include "ktdual/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ktdual {

namespace {

using Poly = std::vector<Rational>; // dense, ascending degree

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder in Q[x]; d must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly n, const Poly& d) {
    Poly q;
    int dd = degree(d);
    if (dd < 0) throw InternalError("polynomial division by zero");
    trim(n);
    if (degree(n) >= dd) q.assign(degree(n) - dd + 1, Rational(0));
    const Rational& lead = d.back();
    while (degree(n) >= dd) {
        int shift = degree(n) - dd;
        Rational c = n.back() / lead;
        q[shift] = c;
        for (int i = 0; i <= dd; ++i) n[shift + i] -= c * d[i];
        trim(n);
    }
    return {q, n};
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(Poly a, Poly b) {
    Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        Poly u2 = u0, v2 = v0;
        Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        u2.resize(std::max(u2.size(), qu.size()), Rational(0));
        v2.resize(std::max(v2.size(), qv.size()), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        trim(u2);
        trim(v2);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (a.empty()) throw InternalError("gcd of zero polynomials");
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
    return {a, u0, v0};
}

std::mutex cache_mu;
std::map<long, Poly> phi_cache;                      // n -> Phi_n
std::map<long, std::vector<Poly>> zeta_power_cache;  // n -> [zeta_n^e mod Phi_n, e = 0..n-1]

const Poly& cyclotomic_poly_locked(long n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const Poly& pd = cyclotomic_poly_locked(d);
        auto [q, r] = poly_divmod(p, pd);
        if (!r.empty()) throw InternalError("cyclotomic polynomial division was not exact");
        p = std::move(q);
    }
    return phi_cache.emplace(n, std::move(p)).first->second;
}

const std::vector<Poly>& zeta_powers_locked(long n) {
    auto it = zeta_power_cache.find(n);
    if (it != zeta_power_cache.end()) return it->second;
    const Poly& phi = cyclotomic_poly_locked(n);
    size_t deg = phi.size() - 1;
    std::vector<Poly> table;
    table.reserve(n);
    Poly cur{Rational(1)};
    for (long e = 0; e < n; ++e) {
        table.push_back(cur);
        // multiply by x, reduce once (Phi is monic)
        cur.insert(cur.begin(), Rational(0));
        if (cur.size() > deg) {
            Rational lead = cur.back();
            cur.pop_back();
            if (lead != 0)
                for (size_t i = 0; i < deg; ++i) cur[i] -= lead * phi[i];
            trim(cur);
        }
    }
    return zeta_power_cache.emplace(n, std::move(table)).first->second;
}

// zeta_m^e (e reduced mod m) as a reduced coefficient vector, padded to phi(m).
Poly zeta_power_padded(long m, long e, size_t phim) {
    std::lock_guard<std::mutex> lk(cache_mu);
    e %= m;
    if (e < 0) e += m;
    Poly p = zeta_powers_locked(m)[e];
    p.resize(phim, Rational(0));
    return p;
}

// Solve E x = c over Q by Gaussian elimination, E given column-wise.
// Returns empty optional when inconsistent.
std::optional<Poly> solve_columns(const std::vector<Poly>& cols, const Poly& c) {
    size_t rows = c.size(), ncols = cols.size();
    std::vector<Poly> m(rows, Poly(ncols + 1, Rational(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < rows; ++i) m[i][ncols] = c[i];

    size_t row = 0;
    std::vector<size_t> pivot_of_col(ncols, SIZE_MAX);
    for (size_t col = 0; col < ncols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        Rational inv = 1 / m[row][col];
        for (size_t j = col; j <= ncols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_of_col[col] = row++;
    }
    for (size_t i = row; i < rows; ++i)
        if (m[i][ncols] != 0) return std::nullopt;
    Poly x(ncols, Rational(0));
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_of_col[col] != SIZE_MAX) x[col] = m[pivot_of_col[col]][ncols];
    return x;
}

} // namespace

long euler_phi(long n) { return static_cast<long>(cyclotomic_polynomial(n).size()) - 1; }

const std::vector<Rational>& cyclotomic_polynomial(long n) {
    if (n < 1) throw UserError("cyclotomic polynomial index must be positive");
    std::lock_guard<std::mutex> lk(cache_mu);
    return cyclotomic_poly_locked(n);
}

std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Cyclotomic Cyclotomic::from_polynomial(long n, std::vector<Rational> coeffs) {
    if (n < 1) throw UserError("conductor must be positive");
    const Poly& phi = cyclotomic_polynomial(n);
    Poly rem = poly_divmod(std::move(coeffs), phi).second;
    size_t phin = phi.size() - 1;

    if (rem.empty()) return Cyclotomic();
    if (rem.size() == 1) {
        Cyclotomic r;
        r.coeffs_[0] = rem[0];
        return r;
    }

    // Normalize the conductor downward: find the smallest divisor d of n
    // whose cyclotomic field contains the value.
    rem.resize(phin, Rational(0));
    for (long d : divisors(n)) {
        if (d == n) break;
        size_t phid = static_cast<size_t>(euler_phi(d));
        std::vector<Poly> cols;
        cols.reserve(phid);
        for (size_t j = 0; j < phid; ++j)
            cols.push_back(zeta_power_padded(n, (n / d) * static_cast<long>(j), phin));
        if (auto x = solve_columns(cols, rem)) {
            x->resize(phid, Rational(0));
            return Cyclotomic(d, std::move(*x), true);
        }
    }
    return Cyclotomic(n, std::move(rem), true);
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
    if (n < 1) throw UserError("root-of-unity order must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = 1;
    return from_polynomial(n, std::move(p));
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
bool Cyclotomic::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

std::optional<Rational> Cyclotomic::as_rational() const {
    if (conductor_ != 1) return std::nullopt;
    return coeffs_[0];
}

bool Cyclotomic::is_integer() const { return conductor_ == 1 && ktdual::is_integer(coeffs_[0]); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    long m = std::lcm(conductor_, o.conductor_);
    size_t phim = static_cast<size_t>(euler_phi(m));
    Poly a(phim, Rational(0)), b(phim, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        Poly col = zeta_power_padded(m, (m / conductor_) * static_cast<long>(j), phim);
        for (size_t i = 0; i < phim; ++i) a[i] += coeffs_[j] * col[i];
    }
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
        if (o.coeffs_[j] == 0) continue;
        Poly col = zeta_power_padded(m, (m / o.conductor_) * static_cast<long>(j), phim);
        for (size_t i = 0; i < phim; ++i) b[i] += o.coeffs_[j] * col[i];
    }
    for (size_t i = 0; i < phim; ++i) a[i] += b[i];
    *this = from_polynomial(m, std::move(a));
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (is_zero() || o.is_zero()) {
        *this = Cyclotomic();
        return *this;
    }
    if (conductor_ == 1) { // rational scalar times o
        Rational s = coeffs_[0];
        Cyclotomic r = o;
        for (auto& c : r.coeffs_) c *= s;
        *this = std::move(r);
        return *this;
    }
    if (o.conductor_ == 1) {
        Rational s = o.coeffs_[0];
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    long m = std::lcm(conductor_, o.conductor_);
    size_t phim = static_cast<size_t>(euler_phi(m));
    // Accumulate sum_{i,j} a_i b_j zeta_m^{(m/Na) i + (m/Nb) j} via the power table.
    Poly acc(phim, Rational(0));
    long sa = m / conductor_, sb = m / o.conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            Rational prod = coeffs_[i] * o.coeffs_[j];
            Poly col = zeta_power_padded(m, sa * static_cast<long>(i) + sb * static_cast<long>(j), phim);
            for (size_t t = 0; t < phim; ++t) acc[t] += prod * col[t];
        }
    }
    *this = from_polynomial(m, std::move(acc));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw UserError("cyclotomic division by zero");
    if (conductor_ == 1) {
        Cyclotomic r;
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    Poly a = coeffs_;
    trim(a);
    auto [g, u, v] = poly_ext_gcd(a, cyclotomic_polynomial(conductor_));
    (void)v;
    if (degree(g) != 0) throw InternalError("cyclotomic polynomial is not coprime to a nonzero element");
    return from_polynomial(conductor_, std::move(u));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::conj() const {
    if (conductor_ == 1) return *this;
    size_t phin = coeffs_.size();
    Poly acc(phin, Rational(0));
    for (size_t j = 0; j < phin; ++j) {
        if (coeffs_[j] == 0) continue;
        Poly col = zeta_power_padded(conductor_, -static_cast<long>(j), phin);
        for (size_t i = 0; i < phin; ++i) acc[i] += coeffs_[j] * col[i];
    }
    // Conjugation is a field automorphism fixing every cyclotomic subfield
    // setwise, so the conductor cannot drop; no downgrade scan needed.
    return Cyclotomic(conductor_, std::move(acc), true);
}

std::complex<double> Cyclotomic::evalf() const {
    static const double tau = 6.283185307179586476925286766559;
    std::complex<double> z = 0;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double arg = tau * static_cast<double>(j) / static_cast<double>(conductor_);
        z += coeffs_[j].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "z" << conductor_;
            if (j > 1) out << "^" << j;
        }
    }
    return out.str();
}

void to_json(nlohmann::json& j, const Cyclotomic& c) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(rational_str(q));
    j = nlohmann::json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, Cyclotomic& c) {
    if (j.is_number_integer()) { // shorthand for a rational integer
        c = Cyclotomic(j.get<long>());
        return;
    }
    if (j.is_string()) {
        c = Cyclotomic(parse_rational(j.get<std::string>()));
        return;
    }
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw UserError("cyclotomic value must be an integer, a \"p/q\" string, or {conductor, coeffs}");
    long n = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& e : j.at("coeffs")) {
        if (e.is_number_integer())
            coeffs.emplace_back(e.get<long>());
        else
            coeffs.push_back(parse_rational(e.get<std::string>()));
    }
    c = Cyclotomic::from_polynomial(n, std::move(coeffs));
}

} // namespace ktdual
