#include "ktdual/oracle.hpp"

namespace ktdual {

namespace {

using YPoly = std::vector<VirtualCharacter>; // ascending coefficients in y

void ytrim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly ymul(const YPoly& a, const YPoly& b, const GroupPtr& g) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1, VirtualCharacter::zero(g));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ytrim(r);
    return r;
}

// Remainder of p modulo the monic divisor d (leading coefficient trivial).
YPoly yrem_monic(YPoly p, const YPoly& d, const GroupPtr& g) {
    size_t nd = d.size() - 1;
    ytrim(p);
    while (p.size() > nd) {
        VirtualCharacter lead = p.back();
        size_t shift = p.size() - 1 - nd;
        p.pop_back();
        if (lead.is_zero()) continue;
        for (size_t i = 0; i < nd; ++i) p[shift + i] -= lead * d[i];
        ytrim(p);
    }
    p.resize(nd, VirtualCharacter::zero(g));
    return p;
}

// The monic divisor y^n + sigma_1 y^{n-1} + ... + sigma_n.
YPoly monic_divisor(const KContextPtr& ctx) {
    const GroupPtr& g = ctx->group();
    int n = ctx->dim();
    YPoly d;
    d.reserve(static_cast<size_t>(n) + 1);
    for (int j = 0; j < n; ++j) d.push_back(ctx->sigma(n - j));
    d.push_back(VirtualCharacter::trivial(g));
    return d;
}

// Horner evaluation of p(z) at z = 1 - y (independent of rewrite_in_y's
// binomial expansion). p must have min_exp >= 0.
YPoly horner_rewrite(const LaurentPolynomial& p) {
    const GroupPtr& g = p.group();
    if (p.is_zero()) return {};
    int top = p.max_exp();
    YPoly one_minus_y{VirtualCharacter::trivial(g), -VirtualCharacter::trivial(g)};
    YPoly acc;
    for (int e = top; e >= 0; --e) {
        acc = ymul(acc, one_minus_y, g);
        VirtualCharacter c = p.coeff(e);
        if (!c.is_zero()) {
            if (acc.empty()) acc.push_back(c);
            else acc[0] += c;
        }
        ytrim(acc);
    }
    return acc;
}

// Polynomial w of degree < n with (1-y) w = 1 modulo the monic divisor,
// found by solving the n x n system pointwise over each conjugacy class.
YPoly z_inverse_by_solve(const KContextPtr& ctx) {
    const GroupPtr& g = ctx->group();
    int n = ctx->dim();
    // multiplication-by-(1-y) matrix in the basis {1, y, ..., y^{n-1}}:
    // (1-y) y^j = y^j - y^{j+1}, with y^n = -(sigma_n + ... + sigma_1 y^{n-1}).
    CharacterMatrix m(static_cast<size_t>(n),
                      std::vector<VirtualCharacter>(static_cast<size_t>(n), VirtualCharacter::zero(g)));
    for (int j = 0; j < n; ++j) {
        m[static_cast<size_t>(j)][static_cast<size_t>(j)] += VirtualCharacter::trivial(g);
        if (j + 1 < n) {
            m[static_cast<size_t>(j + 1)][static_cast<size_t>(j)] -= VirtualCharacter::trivial(g);
        } else {
            for (int i = 0; i < n; ++i)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] += ctx->sigma(n - i);
        }
    }
    YPoly w(static_cast<size_t>(n), VirtualCharacter::zero(g));
    std::vector<std::vector<Cyclotomic>> per_class(static_cast<size_t>(g->num_classes()));
    for (int c = 0; c < g->num_classes(); ++c) {
        auto mc = character_matrix_at_class(m, c);
        std::vector<Cyclotomic> rhs(static_cast<size_t>(n));
        rhs[0] = Cyclotomic(1);
        auto sol = linalg::solve(std::move(mc), std::move(rhs));
        if (!sol) throw InternalError("z is not invertible in the quotient (oracle solve failed)");
        per_class[static_cast<size_t>(c)] = std::move(*sol);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Cyclotomic> vals(static_cast<size_t>(g->num_classes()));
        for (int c = 0; c < g->num_classes(); ++c) vals[static_cast<size_t>(c)] = per_class[static_cast<size_t>(c)][static_cast<size_t>(i)];
        w[static_cast<size_t>(i)] = VirtualCharacter(g, std::move(vals));
    }
    return w;
}

} // namespace

KClass divide_reduce(const KContextPtr& ctx, const LaurentPolynomial& p) {
    if (p.group() != ctx->group()) throw UserError("Laurent polynomial lives on the wrong group");
    const GroupPtr& g = ctx->group();
    int n = ctx->dim();
    YPoly d = monic_divisor(ctx);

    int k = std::max(0, -p.min_exp());
    YPoly r = yrem_monic(horner_rewrite(p.shifted(k)), d, g);
    if (k > 0) {
        YPoly w = z_inverse_by_solve(ctx);
        for (int t = 0; t < k; ++t) r = yrem_monic(ymul(r, w, g), d, g);
    }
    r.resize(static_cast<size_t>(n), VirtualCharacter::zero(g));
    return KClass(ctx, std::move(r));
}

LaurentPolynomial product_euler(const std::vector<VirtualCharacter>& summands) {
    if (summands.empty()) throw UserError("product Euler class needs at least one summand");
    const GroupPtr& g = summands.front().group();
    // accumulate prod (1 - alpha_i z) on raw z-coefficient vectors
    std::vector<VirtualCharacter> acc{VirtualCharacter::trivial(g)};
    for (const auto& alpha : summands) {
        if (alpha.group() != g) throw UserError("product Euler class: summands on different groups");
        auto d = alpha.dim().as_rational();
        if (!d || *d != 1) throw UserError("product Euler class needs 1-dimensional summands, got " + alpha.str());
        std::vector<VirtualCharacter> next(acc.size() + 1, VirtualCharacter::zero(g));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i];
            next[i + 1] -= acc[i] * alpha;
        }
        acc = std::move(next);
    }
    LaurentPolynomial out(g);
    for (size_t i = 0; i < acc.size(); ++i) out.set_coeff(static_cast<int>(i), acc[i]);
    return out;
}

std::vector<VirtualCharacter> elementary_symmetric_sigma(const VirtualCharacter& v) {
    const GroupPtr& g = v.group();
    std::vector<VirtualCharacter> lines = abelian_line_decomposition(v);
    size_t n = lines.size();
    // e_j of the quantities alpha_i^{-1} - 1, built up one variable at a time
    std::vector<VirtualCharacter> e(n + 1, VirtualCharacter::zero(g));
    e[0] = VirtualCharacter::trivial(g);
    size_t used = 0;
    for (const auto& alpha : lines) {
        VirtualCharacter q = dual(alpha) - VirtualCharacter::trivial(g);
        ++used;
        for (size_t j = std::min(used, n); j >= 1; --j) e[j] += e[j - 1] * q;
    }
    return std::vector<VirtualCharacter>(e.begin() + 1, e.end());
}

OracleReport numeric_crosscheck(const std::string& subject, const VirtualCharacter& lhs,
                                const VirtualCharacter& rhs) {
    OracleReport rep;
    rep.subject = subject;
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    if (lhs.group() != rhs.group()) {
        rep.matches = false;
        rep.detail = "values live on different groups";
        return rep;
    }
    double worst = 0;
    for (size_t c = 0; c < lhs.values().size(); ++c)
        worst = std::max(worst, std::abs(lhs.values()[c].evalf() - rhs.values()[c].evalf()));
    rep.matches = worst < 1e-9;
    rep.detail = "max |lhs - rhs| over classes = " + std::to_string(worst);
    return rep;
}

OracleReport exact_crosscheck(const std::string& subject, const VirtualCharacter& lhs,
                              const VirtualCharacter& rhs) {
    OracleReport rep;
    rep.subject = subject;
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.matches = lhs == rhs;
    rep.detail = rep.matches ? "exact match" : "exact mismatch";
    return rep;
}

nlohmann::json OracleReport::to_json() const {
    return nlohmann::json{
        {"subject", subject}, {"matches", matches}, {"lhs", lhs}, {"rhs", rhs}, {"detail", detail}};
}

} // namespace ktdual
