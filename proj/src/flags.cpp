#include "ktdual/flags.hpp"

#include <algorithm>

namespace ktdual {

namespace {

// Irreducible index of each 1-dimensional character, sorted.
std::vector<int> summand_indices(const GroupPtr& g, const std::vector<VirtualCharacter>& lines) {
    std::vector<int> idx;
    idx.reserve(lines.size());
    for (const auto& l : lines) {
        int found = -1;
        for (int i = 0; i < g->num_irreducibles(); ++i)
            if (l == VirtualCharacter::irreducible(g, i)) {
                found = i;
                break;
            }
        if (found < 0) throw UserError("flag entry is not an irreducible character: " + l.str());
        idx.push_back(found);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

// Column i = coordinates of the i-th flag basis element.
CharacterMatrix basis_matrix(const std::vector<KClass>& basis) {
    size_t n = basis.size();
    CharacterMatrix m(n, std::vector<VirtualCharacter>());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[j].push_back(basis[i].coord(static_cast<int>(j)));
    return m;
}

// Solve M x = rhs pointwise over every conjugacy class.
std::vector<VirtualCharacter> solve_per_class(const GroupPtr& g, const CharacterMatrix& m,
                                              const std::vector<VirtualCharacter>& rhs,
                                              const char* what) {
    size_t n = rhs.size();
    std::vector<std::vector<Cyclotomic>> sols(static_cast<size_t>(g->num_classes()));
    for (int c = 0; c < g->num_classes(); ++c) {
        std::vector<Cyclotomic> b(n);
        for (size_t i = 0; i < n; ++i) b[i] = rhs[i].value(c);
        auto sol = linalg::solve(character_matrix_at_class(m, c), std::move(b));
        if (!sol)
            throw InternalError(std::string(what) + ": singular change-of-basis matrix at class '" +
                                g->cls(c).label + "'");
        sols[static_cast<size_t>(c)] = std::move(*sol);
    }
    std::vector<VirtualCharacter> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Cyclotomic> vals(static_cast<size_t>(g->num_classes()));
        for (int c = 0; c < g->num_classes(); ++c) vals[static_cast<size_t>(c)] = sols[static_cast<size_t>(c)][i];
        out.emplace_back(g, std::move(vals));
    }
    return out;
}

} // namespace

Flag make_flag(const KContextPtr& ctx, std::vector<VirtualCharacter> order) {
    const GroupPtr& g = ctx->group();
    if (!g->is_abelian())
        throw UserError("'" + g->name() + "' is not abelian: cannot choose a flag of 1-dimensional summands");
    std::vector<VirtualCharacter> lines = abelian_line_decomposition(ctx->rep());
    if (summand_indices(g, order) != summand_indices(g, lines))
        throw UserError("flag ordering is not a permutation of the summands of " + ctx->rep().str());
    return Flag{ctx, std::move(order)};
}

std::vector<KClass> flag_basis(const Flag& f) {
    const GroupPtr& g = f.ctx->group();
    std::vector<KClass> basis;
    basis.reserve(f.order.size());
    LaurentPolynomial p = LaurentPolynomial::one(g);
    for (size_t i = 0; i < f.order.size(); ++i) {
        basis.push_back(reduce(f.ctx, p)); // y^{V^i} for i = 0..n-1
        if (i + 1 < f.order.size()) {
            LaurentPolynomial factor = LaurentPolynomial::one(g);
            factor.set_coeff(1, -f.order[i]);
            p *= factor;
        }
    }
    return basis;
}

std::vector<VirtualCharacter> flag_dual_coords(const Flag& f, const KClass& x) {
    if (x.ctx() != f.ctx) throw UserError("K-theory context mismatch");
    CharacterMatrix m = basis_matrix(flag_basis(f));
    return solve_per_class(f.ctx->group(), m, x.coords(), "flag coordinates");
}

KHomologyClass flag_dual_sum(const Flag& f) {
    const GroupPtr& g = f.ctx->group();
    CharacterMatrix m = basis_matrix(flag_basis(f));
    // sum of dual functionals evaluated on y^j: solve M^T c = (1,...,1)
    size_t n = m.size();
    CharacterMatrix mt(n, std::vector<VirtualCharacter>());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) mt[i].push_back(m[j][i]);
    std::vector<VirtualCharacter> ones(n, VirtualCharacter::trivial(g));
    return KHomologyClass(f.ctx, solve_per_class(g, mt, ones, "flag dual sum"));
}

VirtualCharacter flag_change_determinant(const Flag& a, const Flag& b) {
    if (a.ctx != b.ctx) throw UserError("K-theory context mismatch");
    const GroupPtr& g = a.ctx->group();
    CharacterMatrix ma = basis_matrix(flag_basis(a));
    CharacterMatrix mb = basis_matrix(flag_basis(b));
    std::vector<Cyclotomic> vals(static_cast<size_t>(g->num_classes()));
    for (int c = 0; c < g->num_classes(); ++c) {
        Cyclotomic da = linalg::determinant(character_matrix_at_class(ma, c));
        Cyclotomic db = linalg::determinant(character_matrix_at_class(mb, c));
        vals[static_cast<size_t>(c)] = db / da;
    }
    return VirtualCharacter(g, std::move(vals));
}

std::vector<Flag> enumerate_flags(const KContextPtr& ctx) {
    const GroupPtr& g = ctx->group();
    if (!g->is_abelian())
        throw UserError("'" + g->name() + "' is not abelian: cannot choose a flag of 1-dimensional summands");
    std::vector<int> idx = summand_indices(g, abelian_line_decomposition(ctx->rep()));
    std::vector<Flag> out;
    do {
        std::vector<VirtualCharacter> order;
        order.reserve(idx.size());
        for (int i : idx) order.push_back(VirtualCharacter::irreducible(g, i));
        out.push_back(Flag{ctx, std::move(order)});
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

FlagIndependenceReport verify_flag_independence(const KContextPtr& ctx) {
    FlagIndependenceReport report;
    const GroupPtr& g = ctx->group();
    std::vector<Flag> flags = enumerate_flags(ctx);
    report.flag_count = static_cast<long>(flags.size());
    std::vector<VirtualCharacter> ones(static_cast<size_t>(ctx->dim()), VirtualCharacter::trivial(g));
    report.independent = true;
    for (size_t k = 0; k < flags.size(); ++k) {
        KHomologyClass sum = flag_dual_sum(flags[k]);
        if (sum.coords() != ones) {
            report.independent = false;
            report.detail = "flag #" + std::to_string(k) + " has dual sum != (1,...,1)";
            report.sum_coords = sum.coords();
            return report;
        }
    }
    report.sum_coords = std::move(ones);
    report.detail = "all " + std::to_string(report.flag_count) + " flag dual sums equal (1,...,1)";
    return report;
}

nlohmann::json FlagIndependenceReport::to_json() const {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : sum_coords) coords.push_back(c.str());
    return nlohmann::json{{"flag_count", flag_count},
                          {"independent", independent},
                          {"sum_coordinates", coords},
                          {"detail", detail}};
}

} // namespace ktdual
