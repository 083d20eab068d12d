#include "ktdual/ktheory.hpp"

#include <sstream>

namespace ktdual {

std::vector<VirtualCharacter> sigma_coefficients(const VirtualCharacter& v) {
    long n = genuine_dim(v);
    if (n < 1) throw UserError("sigma coefficients need a genuine representation of dimension >= 1");
    VirtualCharacter vdual = dual(v);
    std::vector<VirtualCharacter> lam;
    lam.reserve(static_cast<size_t>(n) + 1);
    for (long t = 0; t <= n; ++t) lam.push_back(exterior(vdual, t));

    std::vector<VirtualCharacter> sigma;
    sigma.reserve(static_cast<size_t>(n));
    for (long m = 1; m <= n; ++m) {
        VirtualCharacter acc = VirtualCharacter::zero(v.group());
        for (long t = 0; t <= m; ++t) {
            Rational c(binomial(n - m + t, n - m));
            if (t % 2 == 1) c = -c;
            acc += lam[static_cast<size_t>(m - t)] * Cyclotomic(c);
        }
        sigma.push_back(std::move(acc));
    }
    return sigma;
}

KContext::KContext(GroupPtr group, VirtualCharacter v, int n)
    : group_(std::move(group)), v_(std::move(v)), n_(n), det_inv_(VirtualCharacter::zero(group_)) {}

KContextPtr KContext::create(const VirtualCharacter& v, long s_max) {
    long n = genuine_dim(v);
    if (n < 1) throw UserError("K-theory context needs a genuine representation of dimension >= 1");
    auto ctx = std::shared_ptr<KContext>(new KContext(v.group(), v, static_cast<int>(n)));
    ctx->sigma_ = sigma_coefficients(v);
    ctx->det_inv_ = dual(det_rep(v));

    // normalization identity: det(V)^{-1} chi(V(x)z) = sigma_n + ... + sigma_1 y^{n-1} + y^n
    LaurentPolynomial normalized = euler_class(v) * ctx->det_inv_;
    std::vector<VirtualCharacter> ycoeffs = rewrite_in_y(normalized);
    if (static_cast<long>(ycoeffs.size()) != n + 1)
        throw InternalError("normalized Euler class has wrong y-degree");
    for (long j = 0; j < n; ++j)
        if (ycoeffs[static_cast<size_t>(j)] != ctx->sigma_[static_cast<size_t>(n - 1 - j)])
            throw InternalError("normalization identity fails at y^" + std::to_string(j) + " for " + v.str());
    if (ycoeffs[static_cast<size_t>(n)] != VirtualCharacter::trivial(v.group()))
        throw InternalError("normalized Euler class is not monic in y");

    // unit identity: 1 + sigma_1 + ... + sigma_n = det(V)^{-1}
    VirtualCharacter unit = VirtualCharacter::trivial(v.group());
    for (const auto& s : ctx->sigma_) unit += s;
    if (unit != ctx->det_inv_) throw InternalError("unit identity 1 + sum sigma = det(V)^{-1} fails for " + v.str());

    // z^{-1} = sum_{i=1..n} (-1)^{i+1} lambda^i(V) z^{i-1}, rewritten in y
    LaurentPolynomial zi(v.group());
    for (long i = 1; i <= n; ++i) {
        VirtualCharacter li = exterior(v, i);
        if (i % 2 == 0) li = -li;
        zi.set_coeff(static_cast<int>(i - 1), std::move(li));
    }
    ctx->z_inv_ = rewrite_in_y(zi);
    ctx->z_inv_.resize(static_cast<size_t>(n), VirtualCharacter::zero(v.group()));

    // seed the reduction table
    std::vector<VirtualCharacter> row0;
    row0.reserve(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) row0.push_back(-ctx->sigma_[static_cast<size_t>(n - 1 - j)]);
    ctx->table_.push_back(std::move(row0));
    if (s_max < 0) s_max = 2 * n;
    ctx->lambda_row(s_max);
    return ctx;
}

std::vector<VirtualCharacter> KContext::lambda_row(long s) const {
    if (s < 0) throw UserError("lambda row index must be non-negative");
    std::lock_guard<std::mutex> lk(table_mu_);
    while (static_cast<long>(table_.size()) <= s) {
        const auto& prev = table_.back();
        std::vector<VirtualCharacter> next;
        next.reserve(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) {
            VirtualCharacter val = prev[static_cast<size_t>(n_ - 1)] * sigma_[static_cast<size_t>(n_ - 1 - j)];
            val = -val;
            if (j > 0) val += prev[static_cast<size_t>(j - 1)];
            next.push_back(std::move(val));
        }
        table_.push_back(std::move(next));
    }
    return table_[static_cast<size_t>(s)];
}

KClass::KClass(KContextPtr ctx, std::vector<VirtualCharacter> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (!ctx_) throw UserError("K-class needs a context");
    if (static_cast<int>(coords_.size()) != ctx_->dim())
        throw UserError("K-class needs exactly " + std::to_string(ctx_->dim()) + " coordinates");
    for (const auto& c : coords_)
        if (c.group() != ctx_->group()) throw UserError("K-class coordinate lives on the wrong group");
}

KClass KClass::zero(const KContextPtr& ctx) {
    return KClass(ctx, std::vector<VirtualCharacter>(static_cast<size_t>(ctx->dim()),
                                                     VirtualCharacter::zero(ctx->group())));
}

KClass KClass::one(const KContextPtr& ctx) {
    KClass r = zero(ctx);
    r.coords_[0] = VirtualCharacter::trivial(ctx->group());
    return r;
}

KClass KClass::y_power(const KContextPtr& ctx, long i) {
    if (i < 0) throw UserError("y-power must be non-negative");
    if (i < ctx->dim()) {
        KClass r = zero(ctx);
        r.coords_[static_cast<size_t>(i)] = VirtualCharacter::trivial(ctx->group());
        return r;
    }
    return KClass(ctx, ctx->lambda_row(i - ctx->dim()));
}

bool KClass::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const VirtualCharacter& c) { return c.is_zero(); });
}

KClass KClass::operator-() const {
    KClass r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

namespace {

void require_same_ctx(const KContextPtr& a, const KContextPtr& b) {
    if (a != b) throw UserError("K-theory context mismatch");
}

} // namespace

KClass& KClass::operator+=(const KClass& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    require_same_ctx(ctx_, o.ctx_);
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

KClass& KClass::operator*=(const KClass& o) {
    require_same_ctx(ctx_, o.ctx_);
    size_t n = coords_.size();
    std::vector<VirtualCharacter> conv(2 * n - 1, VirtualCharacter::zero(ctx_->group()));
    for (size_t i = 0; i < n; ++i) {
        if (coords_[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) conv[i + j] += coords_[i] * o.coords_[j];
    }
    *this = reduce_y_polynomial(ctx_, std::move(conv));
    return *this;
}

KClass& KClass::operator*=(const VirtualCharacter& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

std::string KClass::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << coords_[i].str() << ")";
        if (i == 1) out << "*y";
        if (i > 1) out << "*y^" << i;
    }
    if (first) return "0";
    return out.str();
}

KHomologyClass::KHomologyClass(KContextPtr ctx, std::vector<VirtualCharacter> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (!ctx_) throw UserError("K-homology class needs a context");
    if (static_cast<int>(coords_.size()) != ctx_->dim())
        throw UserError("K-homology class needs exactly " + std::to_string(ctx_->dim()) + " coordinates");
}

VirtualCharacter epsilon(const KClass& x) {
    VirtualCharacter acc = VirtualCharacter::zero(x.ctx()->group());
    for (const auto& c : x.coords()) acc += c;
    return acc;
}

KClass reduce_y_polynomial(const KContextPtr& ctx, std::vector<VirtualCharacter> ycoeffs) {
    int n = ctx->dim();
    std::vector<VirtualCharacter> coords(static_cast<size_t>(n), VirtualCharacter::zero(ctx->group()));
    for (size_t t = 0; t < ycoeffs.size(); ++t) {
        if (ycoeffs[t].is_zero()) continue;
        if (static_cast<int>(t) < n) {
            coords[t] += ycoeffs[t];
        } else {
            std::vector<VirtualCharacter> row = ctx->lambda_row(static_cast<long>(t) - n);
            for (int j = 0; j < n; ++j) coords[static_cast<size_t>(j)] += ycoeffs[t] * row[static_cast<size_t>(j)];
        }
    }
    return KClass(ctx, std::move(coords));
}

KClass reduce(const KContextPtr& ctx, const LaurentPolynomial& p) {
    if (p.group() != ctx->group()) throw UserError("Laurent polynomial lives on the wrong group");
    int k = std::max(0, -p.min_exp());
    KClass r = reduce_y_polynomial(ctx, rewrite_in_y(p.shifted(k)));
    if (k > 0) {
        KClass zinv(ctx, ctx->z_inverse_coords());
        for (int t = 0; t < k; ++t) r *= zinv;
    }
    return r;
}

VirtualCharacter pairing(const KClass& x, const KClass& w) {
    require_same_ctx(x.ctx(), w.ctx());
    return epsilon(x * w);
}

CharacterMatrix gram_matrix(const KContextPtr& ctx) {
    int n = ctx->dim();
    CharacterMatrix g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<size_t>(i)].push_back(epsilon(KClass::y_power(ctx, i + j)));
    return g;
}

VirtualCharacter kronecker(const KClass& x, const KHomologyClass& h) {
    if (x.ctx() != h.ctx()) throw UserError("K-theory context mismatch");
    VirtualCharacter acc = VirtualCharacter::zero(x.ctx()->group());
    for (size_t i = 0; i < x.coords().size(); ++i) acc += x.coords()[i] * h.coords()[i];
    return acc;
}

KHomologyClass poincare_dual(const KClass& x) {
    const KContextPtr& ctx = x.ctx();
    std::vector<VirtualCharacter> coords;
    coords.reserve(static_cast<size_t>(ctx->dim()));
    for (int i = 0; i < ctx->dim(); ++i) coords.push_back(epsilon(x * KClass::y_power(ctx, i)));
    return KHomologyClass(ctx, std::move(coords));
}

linalg::Matrix<Cyclotomic> character_matrix_at_class(const CharacterMatrix& m, int c) {
    linalg::Matrix<Cyclotomic> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Cyclotomic> r;
        r.reserve(row.size());
        for (const auto& v : row) r.push_back(v.value(c));
        out.push_back(std::move(r));
    }
    return out;
}

PerfectionCertificate verify_perfect(const KContextPtr& ctx) {
    PerfectionCertificate cert;
    const GroupPtr& g = ctx->group();
    int n = ctx->dim();
    CharacterMatrix gram = gram_matrix(ctx);

    // Invert pointwise over each conjugacy class: the ring of class
    // functions is a finite product of cyclotomic fields, and a matrix over
    // a product of fields is invertible iff it is invertible factorwise.
    std::vector<linalg::Matrix<Cyclotomic>> inverses;
    for (int c = 0; c < g->num_classes(); ++c) {
        auto inv = linalg::invert(character_matrix_at_class(gram, c));
        if (!inv) {
            cert.detail = "Gram matrix is singular at class '" + g->cls(c).label + "'";
            return cert;
        }
        inverses.push_back(std::move(*inv));
    }

    CharacterMatrix h(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Cyclotomic> vals(static_cast<size_t>(g->num_classes()));
            for (int c = 0; c < g->num_classes(); ++c)
                vals[static_cast<size_t>(c)] = inverses[static_cast<size_t>(c)][static_cast<size_t>(i)]
                                                       [static_cast<size_t>(j)];
            VirtualCharacter entry(g, std::move(vals));
            if (!is_virtual(entry)) {
                cert.detail = "inverse Gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not in R(G): " + entry.str();
                return cert;
            }
            h[static_cast<size_t>(i)].push_back(std::move(entry));
        }

    // certify G * H = I exactly
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            VirtualCharacter acc = VirtualCharacter::zero(g);
            for (int k = 0; k < n; ++k)
                acc += gram[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       h[static_cast<size_t>(k)][static_cast<size_t>(j)];
            VirtualCharacter expect =
                i == j ? VirtualCharacter::trivial(g) : VirtualCharacter::zero(g);
            if (acc != expect) {
                cert.detail = "G*H differs from the identity at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")";
                return cert;
            }
        }
    cert.perfect = true;
    cert.inverse = std::move(h);
    cert.detail = "exact inverse Gram matrix over R(G) certified";
    return cert;
}

KClass restrict_kclass(const KClass& x, const SubgroupEmbedding& e) {
    if (x.ctx()->group() != e.ambient)
        throw UserError("K-class lives on '" + x.ctx()->group()->name() + "', embedding expects '" +
                        e.ambient->name() + "'");
    KContextPtr sub_ctx = KContext::create(restrict_to(x.ctx()->rep(), e));
    std::vector<VirtualCharacter> coords;
    coords.reserve(x.coords().size());
    for (const auto& c : x.coords()) coords.push_back(restrict_to(c, e));
    return KClass(sub_ctx, std::move(coords));
}

KHomologyClass restrict_khomology(const KHomologyClass& h, const SubgroupEmbedding& e) {
    if (h.ctx()->group() != e.ambient)
        throw UserError("K-homology class lives on '" + h.ctx()->group()->name() + "', embedding expects '" +
                        e.ambient->name() + "'");
    KContextPtr sub_ctx = KContext::create(restrict_to(h.ctx()->rep(), e));
    std::vector<VirtualCharacter> coords;
    coords.reserve(h.coords().size());
    for (const auto& c : h.coords()) coords.push_back(restrict_to(c, e));
    return KHomologyClass(sub_ctx, std::move(coords));
}

} // namespace ktdual
