#include "ktdual/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>

#include "ktdual/symbolic.hpp"

namespace ktdual {

namespace {

using Reports = std::vector<OracleReport>;

void check_vc(Reports& out, const std::string& subject, const VirtualCharacter& lhs,
              const VirtualCharacter& rhs) {
    if (lhs == rhs) return;
    OracleReport r;
    r.subject = subject;
    r.matches = false;
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.detail = "exact mismatch";
    out.push_back(std::move(r));
}

void check_true(Reports& out, const std::string& subject, bool ok, const std::string& detail) {
    if (ok) return;
    OracleReport r;
    r.subject = subject;
    r.matches = false;
    r.detail = detail;
    out.push_back(std::move(r));
}

std::mt19937_64 case_rng(uint64_t seed, const std::string& salt) {
    return std::mt19937_64(seed ^ (0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(salt)));
}

VirtualCharacter random_genuine(const GroupPtr& g, std::mt19937_64& rng, long max_mult = 2) {
    std::uniform_int_distribution<long> m(0, max_mult);
    std::vector<long> mult(static_cast<size_t>(g->num_irreducibles()));
    bool any = false;
    for (auto& x : mult) {
        x = m(rng);
        any = any || x > 0;
    }
    if (!any) mult[0] = 1;
    return VirtualCharacter::from_multiplicities(g, mult);
}

VirtualCharacter random_virtual(const GroupPtr& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> m(-2, 2);
    std::vector<long> mult(static_cast<size_t>(g->num_irreducibles()));
    for (auto& x : mult) x = m(rng);
    return VirtualCharacter::from_multiplicities(g, mult);
}

LaurentPolynomial random_laurent(const GroupPtr& g, std::mt19937_64& rng) {
    LaurentPolynomial p(g);
    std::uniform_int_distribution<int> e(-3, 4);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        int exp = e(rng);
        p.set_coeff(exp, p.coeff(exp) + random_virtual(g, rng));
    }
    return p;
}

std::vector<GroupPtr> distinct_groups(const std::vector<SuiteCase>& scope) {
    std::vector<GroupPtr> out;
    std::set<std::string> seen;
    for (const auto& c : scope)
        if (seen.insert(c.group->name()).second) out.push_back(c.group);
    return out;
}

// ---- tables ---------------------------------------------------------------

SymbolicPoly sym_const(int n, long c) { return SymbolicPoly(n, c); }

Reports tables_checks(std::vector<std::string>& notes, long& cases) {
    Reports out;
    auto expect_entry = [&](const GenericTables& t, int i, int j, const SymbolicEntry& want,
                            const std::string& name) {
        ++cases;
        SymbolicEntry got = t.entry(i, j);
        if (got != want) {
            OracleReport r;
            r.subject = name;
            r.lhs = got.str();
            r.rhs = want.str();
            r.detail = "generic table entry differs from the published table";
            out.push_back(std::move(r));
        }
    };
    auto one = [&](int n) { return SymbolicEntry{true, SymbolicPoly(n)}; };
    auto inner = [&](int n, SymbolicPoly p) { return SymbolicEntry{false, std::move(p)}; };

    // dim 2
    {
        GenericTables t(2);
        SymbolicPoly l1 = SymbolicPoly::generator(2, 1);
        (void)l1;
        expect_entry(t, 0, 0, one(2), "table_dim2 (1,1)");
        expect_entry(t, 0, 1, one(2), "table_dim2 (1,y)");
        expect_entry(t, 1, 0, one(2), "table_dim2 (y,1)");
        expect_entry(t, 1, 1, inner(2, sym_const(2, 1)), "table_dim2 (y,y)");
    }
    // dim 3
    {
        GenericTables t(3);
        SymbolicPoly l1 = SymbolicPoly::generator(3, 1);
        for (int i = 0; i < 3; ++i) expect_entry(t, i, 0, one(3), "table_dim3 first column");
        expect_entry(t, 1, 1, one(3), "table_dim3 (y,y)");
        expect_entry(t, 1, 2, inner(3, sym_const(3, 1)), "table_dim3 (y,y^2)");
        expect_entry(t, 2, 1, inner(3, sym_const(3, 1)), "table_dim3 (y^2,y)");
        expect_entry(t, 2, 2, inner(3, sym_const(3, 4) - l1), "table_dim3 (y^2,y^2)");
    }
    // dim 4
    {
        GenericTables t(4);
        SymbolicPoly l1 = SymbolicPoly::generator(4, 1);
        SymbolicPoly l2 = SymbolicPoly::generator(4, 2);
        for (int i = 0; i < 4; ++i) expect_entry(t, i, 0, one(4), "table_dim4 first column");
        expect_entry(t, 1, 1, one(4), "table_dim4 (y,y)");
        expect_entry(t, 1, 2, one(4), "table_dim4 (y,y^2)");
        expect_entry(t, 2, 2, inner(4, sym_const(4, 1)), "table_dim4 (y^2,y^2)");
        expect_entry(t, 1, 3, inner(4, sym_const(4, 1)), "table_dim4 (y,y^3)");
        expect_entry(t, 2, 3, inner(4, sym_const(4, 5) - l1), "table_dim4 (y^2,y^3)");

        // the (y^3, y^3) corner: recursion value vs the printed constant 14
        ++cases;
        SymbolicPoly fifteen = sym_const(4, 15) - sym_const(4, 6) * l1 + l1 * l1 - l2;
        SymbolicPoly fourteen = fifteen - sym_const(4, 1);
        SymbolicEntry corner = t.entry(3, 3);
        check_true(out, "dim4_corner_adjudication: recursion value", corner.inner == fifteen,
                   "recursion gives " + corner.inner.str());
        check_true(out, "dim4_corner_adjudication: differs from printed 14", corner.inner != fourteen,
                   "corner unexpectedly equals the printed table constant");

        // division-oracle route and trivial-representation vanishing check
        GroupPtr c1 = make_cyclic(1);
        KContextPtr flat = KContext::create(VirtualCharacter::trivial(c1) * Cyclotomic(4));
        LaurentPolynomial y6(c1);
        for (int j = 0; j <= 6; ++j) {
            Rational b(binomial(6, j));
            if (j % 2 == 1) b = -b;
            y6.set_coeff(j, VirtualCharacter::trivial(c1) * Cyclotomic(b));
        }
        VirtualCharacter eps_oracle = epsilon(divide_reduce(flat, y6));
        VirtualCharacter eps_recursion = epsilon(KClass::y_power(flat, 6));
        check_vc(out, "dim4_corner_adjudication: oracle agreement", eps_recursion, eps_oracle);
        check_true(out, "dim4_corner_adjudication: trivial-V vanishing", eps_recursion.is_zero(),
                   "eps(y^6) must vanish for V = C^4, got " + eps_recursion.str());
        notes.push_back(
            "dim-4 table corner (y^3,y^3): computed 1 - δ*(15 - 6V* + (V*)^2 - λ^2(V*)); the published "
            "table prints the constant 14 where the recursion, the division oracle and the "
            "trivial-representation vanishing check all give 15.");
    }
    return out;
}

// ---- closed forms ----------------------------------------------------------

Reports closed_forms_case(const SuiteCase& sc) {
    Reports out;
    const GroupPtr& g = sc.group;
    KContextPtr ctx = KContext::create(sc.rep);
    int n = ctx->dim();
    VirtualCharacter one = VirtualCharacter::trivial(g);
    const VirtualCharacter& dstar = ctx->det_inverse();
    auto sigma = [&](int m) { return m > n ? VirtualCharacter::zero(g) : ctx->sigma(m); };

    // normalization identity, checked through the Euler class route
    std::vector<VirtualCharacter> ycoeffs = rewrite_in_y(euler_class(sc.rep) * dstar);
    check_true(out, "normalization_identity: " + sc.label,
               static_cast<int>(ycoeffs.size()) == n + 1, "wrong y-degree");
    if (static_cast<int>(ycoeffs.size()) == n + 1) {
        for (int j = 0; j < n; ++j)
            check_vc(out, "normalization_identity: " + sc.label + " y^" + std::to_string(j),
                     ycoeffs[static_cast<size_t>(j)], sigma(n - j));
        check_vc(out, "normalization_identity: " + sc.label + " leading", ycoeffs[static_cast<size_t>(n)], one);
    }

    VirtualCharacter unit = one;
    for (const auto& s : ctx->sigmas()) unit += s;
    check_vc(out, "unit_identity: " + sc.label, unit, dstar);

    for (int i = 0; i < n; ++i)
        check_vc(out, "epsilon_below_degree: " + sc.label, epsilon(KClass::y_power(ctx, i)), one);

    check_vc(out, "closed_forms_s0_3: " + sc.label + " s=0", epsilon(KClass::y_power(ctx, n)), one - dstar);
    check_vc(out, "closed_forms_s0_3: " + sc.label + " s=1", epsilon(KClass::y_power(ctx, n + 1)),
             one - dstar * (one - sigma(1)));
    check_vc(out, "closed_forms_s0_3: " + sc.label + " s=2", epsilon(KClass::y_power(ctx, n + 2)),
             one - dstar * (one - (sigma(1) + sigma(2)) + sigma(1) * sigma(1)));
    check_vc(out, "closed_forms_s0_3: " + sc.label + " s=3", epsilon(KClass::y_power(ctx, n + 3)),
             one - dstar * (one - (sigma(1) + sigma(2) + sigma(3)) +
                            (Cyclotomic(2) * sigma(1) * sigma(2) + sigma(1) * sigma(1)) -
                            sigma(1) * sigma(1) * sigma(1)));

    VirtualCharacter partial = one;
    for (long s = 0; s <= 8; ++s) {
        check_vc(out, "epsilon_general_formula: " + sc.label + " s=" + std::to_string(s),
                 epsilon(KClass::y_power(ctx, n + s)), one - dstar * partial);
        partial += ctx->lambda_row(s)[static_cast<size_t>(n - 1)];
    }
    return out;
}

// ---- flags ------------------------------------------------------------------

Reports flags_case(const SuiteCase& sc, uint64_t seed) {
    Reports out;
    const GroupPtr& g = sc.group;
    if (!g->is_abelian()) return out;
    KContextPtr ctx = KContext::create(sc.rep);
    auto report = verify_flag_independence(ctx);
    check_true(out, "flag_independence: " + sc.label, report.independent, report.detail);

    auto rng = case_rng(seed, "flags:" + sc.label);
    auto flags = enumerate_flags(ctx);
    std::vector<VirtualCharacter> coords(static_cast<size_t>(ctx->dim()), VirtualCharacter::zero(g));
    for (auto& c : coords) c = random_virtual(g, rng);
    KClass x(ctx, coords);
    for (size_t k = 0; k < flags.size(); ++k) {
        auto dual_coords = flag_dual_coords(flags[k], x);
        VirtualCharacter total = VirtualCharacter::zero(g);
        for (const auto& c : dual_coords) total += c;
        check_vc(out, "flag_functional_identity: " + sc.label + " flag#" + std::to_string(k), total,
                 epsilon(x));

        VirtualCharacter det = flag_change_determinant(flags[0], flags[k]);
        check_true(out, "flag_basis_change_unit_determinant: " + sc.label + " flag#" + std::to_string(k),
                   is_virtual(det) && det * dual(det) == VirtualCharacter::trivial(g),
                   "determinant " + det.str() + " is not a unit of R(G)");

        auto basis = flag_basis(flags[k]);
        for (size_t i = 0; i + 1 < basis.size(); ++i) {
            LaurentPolynomial factor = LaurentPolynomial::one(g);
            factor.set_coeff(1, -flags[k].order[i]);
            check_true(out, "flag_basis_multiplicative: " + sc.label + " flag#" + std::to_string(k),
                       basis[i] * reduce(ctx, factor) == basis[i + 1], "y^{V^i} y^{alpha} != y^{V^{i+1}}");
        }
    }
    return out;
}

// ---- perfection ---------------------------------------------------------------

Reports perfection_case(const SuiteCase& sc, uint64_t seed) {
    Reports out;
    const GroupPtr& g = sc.group;
    KContextPtr ctx = KContext::create(sc.rep);
    auto cert = verify_perfect(ctx);
    check_true(out, "perfect_pairing_certificate: " + sc.label, cert.perfect, cert.detail);

    KHomologyClass fund = poincare_dual(KClass::one(ctx));
    for (const auto& c : fund.coords())
        check_vc(out, "fundamental_class_coordinates: " + sc.label, c, VirtualCharacter::trivial(g));
    for (int i = 0; i < ctx->dim(); ++i)
        check_vc(out, "kronecker_duality: " + sc.label + " y^" + std::to_string(i),
                 kronecker(KClass::y_power(ctx, i), fund), VirtualCharacter::trivial(g));

    auto rng = case_rng(seed, "perfection:" + sc.label);
    std::vector<VirtualCharacter> xc, wc;
    for (int i = 0; i < ctx->dim(); ++i) {
        xc.push_back(random_virtual(g, rng));
        wc.push_back(random_virtual(g, rng));
    }
    KClass x(ctx, xc), w(ctx, wc);
    VirtualCharacter r = random_virtual(g, rng);
    check_vc(out, "pairing_symmetry_bilinearity: " + sc.label + " symmetry", pairing(x, w), pairing(w, x));
    check_vc(out, "pairing_symmetry_bilinearity: " + sc.label + " linearity", pairing(x * r, w),
             pairing(x, w) * r);
    check_vc(out, "pairing_symmetry_bilinearity: " + sc.label + " additivity", pairing(x + w, w),
             pairing(x, w) + pairing(w, w));
    return out;
}

// ---- lambda ring ----------------------------------------------------------------

Reports lambda_ring_group(const GroupPtr& g, uint64_t seed, int iterations, long* tested) {
    Reports out;
    auto rng = case_rng(seed, "lambda:" + g->name());
    for (int iter = 0; iter < iterations; ++iter) {
        VirtualCharacter a = random_genuine(g, rng, 1);
        VirtualCharacter b = random_genuine(g, rng, 1);
        ++*tested;

        for (long k = 0; k <= 3; ++k) {
            VirtualCharacter lhs = exterior(a + b, k);
            VirtualCharacter rhs = VirtualCharacter::zero(g);
            for (long i = 0; i <= k; ++i) rhs += exterior(a, i) * exterior(b, k - i);
            check_vc(out, "cartan_formula: " + g->name() + " k=" + std::to_string(k), lhs, rhs);
        }
        for (long k = 1; k <= 4; ++k) {
            check_vc(out, "adams_ring_homomorphism: " + g->name(), adams(a * b, k), adams(a, k) * adams(b, k));
            check_vc(out, "adams_ring_homomorphism: " + g->name(), adams(a + b, k), adams(a, k) + adams(b, k));
            for (long l = 1; l <= 3; ++l)
                check_vc(out, "adams_composition: " + g->name(), adams(adams(a, l), k), adams(a, k * l));
        }
        long n = genuine_dim(a);
        bool genuine_ok = true;
        try {
            for (long k = 0; k <= n; ++k) genuine_ok = genuine_ok && is_genuine(exterior(a, k));
        } catch (const InternalError&) {
            genuine_ok = false; // Newton integrality failed
        }
        check_true(out, "newton_integrality: " + g->name(), genuine_ok,
                   "exterior power failed integrality for " + a.str());
        check_true(out, "exterior_genuine: " + g->name(), genuine_ok,
                   "non-genuine exterior power of " + a.str());
        if (n >= 1) {
            VirtualCharacter det = det_rep(a);
            check_true(out, "lambda_top_is_det: " + g->name(),
                       det.dim() == Cyclotomic(1) && det * dual(det) == VirtualCharacter::trivial(g),
                       "lambda^n is not a 1-dimensional unit for " + a.str());
            check_true(out, "lambda_top_is_det: " + g->name() + " vanishing above n",
                       exterior(a, n + 1).is_zero(), "lambda^{n+1} != 0 for " + a.str());
        }
    }
    return out;
}

// ---- restriction ------------------------------------------------------------------

Reports restriction_group(const GroupPtr& g, uint64_t seed) {
    Reports out;
    auto embeddings = cyclic_subgroup_embeddings(g);

    linalg::Matrix<Cyclotomic> m;
    for (int i = 0; i < g->num_irreducibles(); ++i) {
        std::vector<Cyclotomic> row;
        VirtualCharacter chi = VirtualCharacter::irreducible(g, i);
        for (const auto& e : embeddings) {
            VirtualCharacter res = restrict_to(chi, e);
            for (const auto& v : res.values()) row.push_back(v);
        }
        m.push_back(std::move(row));
    }
    check_true(out, "joint_cyclic_restriction_injective: " + g->name(),
               linalg::rank(std::move(m)) == g->num_irreducibles(),
               "restriction matrix to cyclic subgroups is rank-deficient");

    auto rng = case_rng(seed, "restriction:" + g->name());
    VirtualCharacter a = random_genuine(g, rng, 1);
    VirtualCharacter b = random_genuine(g, rng, 1);
    for (const auto& e : embeddings) {
        check_vc(out, "restriction_commutes_with_operations: " + g->name() + " tensor",
                 restrict_to(a * b, e), restrict_to(a, e) * restrict_to(b, e));
        check_vc(out, "restriction_commutes_with_operations: " + g->name() + " dual",
                 restrict_to(dual(a), e), dual(restrict_to(a, e)));
        for (long k = 1; k <= 3; ++k) {
            check_vc(out, "restriction_commutes_with_operations: " + g->name() + " adams",
                     restrict_to(adams(a, k), e), adams(restrict_to(a, e), k));
            check_vc(out, "restriction_commutes_with_operations: " + g->name() + " exterior",
                     restrict_to(exterior(a, k), e), exterior(restrict_to(a, e), k));
        }
    }
    return out;
}

Reports restriction_case(const SuiteCase& sc, uint64_t seed) {
    Reports out;
    const GroupPtr& g = sc.group;
    KContextPtr ctx = KContext::create(sc.rep);
    auto rng = case_rng(seed, "restriction-case:" + sc.label);
    for (const auto& e : cyclic_subgroup_embeddings(g)) {
        std::vector<VirtualCharacter> coords;
        for (int i = 0; i < ctx->dim(); ++i) coords.push_back(random_virtual(g, rng));
        KClass x(ctx, coords);
        KClass rx = restrict_kclass(x, e);
        check_vc(out, "restriction_naturality: " + sc.label + " epsilon", restrict_to(epsilon(x), e),
                 epsilon(rx));

        auto rsig = sigma_coefficients(restrict_to(sc.rep, e));
        for (int mdx = 1; mdx <= ctx->dim(); ++mdx)
            check_vc(out, "restriction_naturality: " + sc.label + " sigma_" + std::to_string(mdx),
                     rsig[static_cast<size_t>(mdx - 1)], restrict_to(ctx->sigma(mdx), e));

        auto gram = gram_matrix(ctx);
        auto rgram = gram_matrix(rx.ctx());
        for (size_t i = 0; i < gram.size(); ++i)
            for (size_t j = 0; j < gram.size(); ++j)
                check_vc(out, "restriction_naturality: " + sc.label + " gram", restrict_to(gram[i][j], e),
                         rgram[i][j]);

        KHomologyClass fund = poincare_dual(KClass::one(ctx));
        KHomologyClass rfund = restrict_khomology(fund, e);
        for (const auto& c : rfund.coords())
            check_vc(out, "fundamental_class_restriction: " + sc.label, c,
                     VirtualCharacter::trivial(e.subgroup));
    }
    return out;
}

// ---- oracle equivalence --------------------------------------------------------------

Reports oracle_group(const GroupPtr& g, const VirtualCharacter& rep, uint64_t seed, long* tested) {
    Reports out;
    KContextPtr ctx = KContext::create(rep);
    auto rng = case_rng(seed, "oracle:" + g->name());
    for (int iter = 0; iter < 100; ++iter) {
        LaurentPolynomial p = random_laurent(g, rng);
        ++*tested;
        if (reduce(ctx, p) != divide_reduce(ctx, p)) {
            OracleReport r;
            r.subject = "reduce_division_equivalence: " + g->name() + " iteration " + std::to_string(iter);
            r.lhs = reduce(ctx, p).str();
            r.rhs = divide_reduce(ctx, p).str();
            r.detail = "lambda-row reduction and long-division oracle disagree";
            out.push_back(std::move(r));
        }
    }
    if (g->is_abelian()) {
        for (int iter = 0; iter < 25; ++iter) {
            VirtualCharacter v = random_genuine(g, rng, 1);
            auto lines = abelian_line_decomposition(v);
            if (lines.empty()) continue;
            ++*tested;
            if (euler_class(v) != product_euler(lines)) {
                OracleReport r;
                r.subject = "euler_product_equivalence: " + g->name();
                r.lhs = euler_class(v).str();
                r.rhs = product_euler(lines).str();
                r.detail = "Bott formula and summand product disagree";
                out.push_back(std::move(r));
            }
            auto sig = sigma_coefficients(v);
            auto esig = elementary_symmetric_sigma(v);
            for (size_t m = 0; m < sig.size(); ++m)
                check_vc(out, "splitting_principle_sigma: " + g->name() + " m=" + std::to_string(m + 1),
                         sig[m], esig[m]);
        }
        for (int iter = 0; iter < 2; ++iter) {
            VirtualCharacter v = random_genuine(g, rng, 1);
            check_true(out, "euler_multiplicativity: " + g->name(),
                       euler_class(v + v) == euler_class(v) * euler_class(v),
                       "Euler class is not multiplicative for " + v.str());
        }
    } else {
        auto rng2 = case_rng(seed, "oracle-mult:" + g->name());
        VirtualCharacter v = random_genuine(g, rng2, 1);
        VirtualCharacter w = random_genuine(g, rng2, 1);
        check_true(out, "euler_multiplicativity: " + g->name(),
                   euler_class(v + w) == euler_class(v) * euler_class(w),
                   "Euler class is not multiplicative for " + v.str() + " and " + w.str());
    }
    return out;
}

Reports numeric_controls() {
    Reports out;
    GroupPtr s3 = resolve_group("s3");
    KContextPtr ctx = KContext::create(parse_rep(s3, "triv+std"));
    VirtualCharacter unit = VirtualCharacter::trivial(s3);
    for (const auto& s : ctx->sigmas()) unit += s;
    OracleReport positive = numeric_crosscheck("unit identity (numeric)", unit, ctx->det_inverse());
    check_true(out, "numeric_crosscheck_controls: positive", positive.matches, positive.detail);
    OracleReport negative = numeric_crosscheck("perturbed identity (numeric)",
                                               unit + VirtualCharacter::trivial(s3), ctx->det_inverse());
    check_true(out, "numeric_crosscheck_controls: negative", !negative.matches,
               "perturbed identity unexpectedly matched");
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables",      "closed_forms", "flags",
                                                "perfection",  "lambda_ring",  "restriction",
                                                "oracle_equivalence"};
    return names;
}

SuiteCase make_case(const GroupPtr& g, const std::string& rep_spec) {
    return SuiteCase{g, parse_rep(g, rep_spec), g->name() + ":" + rep_spec};
}

std::vector<SuiteCase> default_scope() {
    std::vector<SuiteCase> scope;
    auto add = [&](const char* gname, std::initializer_list<const char*> reps) {
        GroupPtr g = resolve_group(gname);
        for (const char* r : reps) scope.push_back(make_case(g, r));
    };
    add("c1", {"triv", "2*triv", "3*triv", "4*triv"});
    add("c2", {"sigma", "triv+sigma", "2*triv+sigma", "2*triv+2*sigma"});
    add("c3", {"chi1", "chi1+chi2", "triv+chi1+chi2"});
    add("c4", {"chi1+chi3", "triv+chi1+chi3", "chi1+chi2+2*chi3"});
    add("c6", {"chi1+chi5", "chi2+chi3+chi4"});
    add("c2xc2", {"chi1+chi2", "triv+chi1+chi2+chi3"});
    add("c5", {"chi1+chi2+chi3", "chi1+chi2+chi3+chi4"});
    add("s3", {"std", "triv+std", "sign+std", "std+std"});
    add("d4", {"E1", "triv+E1", "sign+rsgn+rssgn", "E1+E1"});
    add("q8", {"std", "triv+std", "si+sj+sk", "std+std"});
    return scope;
}

SuiteResult run_suite(const std::string& name, const std::vector<SuiteCase>& scope, uint64_t seed) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw UserError("unknown suite '" + name + "'");
    if (scope.empty()) throw UserError("suite scope must be nonempty");

    SuiteResult result;
    result.name = name;
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::future<Reports>> jobs;
    auto launch = [&](std::function<Reports()> f) {
        jobs.push_back(std::async(std::launch::async, std::move(f)));
    };

    if (name == "tables") {
        // group-independent; notes and counts are filled synchronously
        result.failures = tables_checks(result.notes, result.cases_run);
    } else if (name == "closed_forms") {
        for (const auto& sc : scope) launch([sc] { return closed_forms_case(sc); });
        result.cases_run = static_cast<long>(scope.size());
    } else if (name == "flags") {
        for (const auto& sc : scope)
            if (sc.group->is_abelian()) {
                launch([sc, seed] { return flags_case(sc, seed); });
                ++result.cases_run;
            }
    } else if (name == "perfection") {
        for (const auto& sc : scope) launch([sc, seed] { return perfection_case(sc, seed); });
        result.cases_run = static_cast<long>(scope.size());
    } else if (name == "lambda_ring") {
        auto groups = distinct_groups(scope);
        int iterations = static_cast<int>((200 + groups.size() - 1) / groups.size());
        std::vector<long> counts(groups.size(), 0);
        std::vector<std::future<Reports>> local;
        for (size_t i = 0; i < groups.size(); ++i) {
            GroupPtr g = groups[i];
            long* counter = &counts[i];
            local.push_back(std::async(std::launch::async,
                                       [g, seed, iterations, counter] {
                                           return lambda_ring_group(g, seed, iterations, counter);
                                       }));
        }
        for (auto& f : local) {
            Reports r = f.get();
            result.failures.insert(result.failures.end(), r.begin(), r.end());
        }
        for (long c : counts) result.cases_run += c;
    } else if (name == "restriction") {
        for (const auto& g : distinct_groups(scope)) {
            launch([g, seed] { return restriction_group(g, seed); });
            ++result.cases_run;
        }
        for (const auto& sc : scope) {
            launch([sc, seed] { return restriction_case(sc, seed); });
            ++result.cases_run;
        }
    } else if (name == "oracle_equivalence") {
        auto groups = distinct_groups(scope);
        std::vector<long> counts(groups.size(), 0);
        std::vector<std::future<Reports>> local;
        for (size_t i = 0; i < groups.size(); ++i) {
            // pick the first scope case of this group as the context witness
            const SuiteCase* found = nullptr;
            for (const auto& sc : scope)
                if (sc.group == groups[i]) {
                    found = &sc;
                    break;
                }
            GroupPtr g = groups[i];
            VirtualCharacter rep = found->rep;
            long* counter = &counts[i];
            local.push_back(std::async(std::launch::async, [g, rep, seed, counter] {
                return oracle_group(g, rep, seed, counter);
            }));
        }
        for (auto& f : local) {
            Reports r = f.get();
            result.failures.insert(result.failures.end(), r.begin(), r.end());
        }
        for (long c : counts) result.cases_run += c;
        Reports controls = numeric_controls();
        result.failures.insert(result.failures.end(), controls.begin(), controls.end());
        result.cases_run += 2;
    }

    for (auto& f : jobs) {
        Reports r = f.get();
        result.failures.insert(result.failures.end(), r.begin(), r.end());
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<SuiteResult> run_all_suites(const std::vector<SuiteCase>& scope, uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, scope, seed));
    return out;
}

const std::map<std::string, std::vector<std::string>>& coverage_manifest() {
    static const std::map<std::string, std::vector<std::string>> manifest{
        {"tables", {"table_dim2", "table_dim3", "table_dim4", "dim4_corner_adjudication"}},
        {"closed_forms",
         {"closed_forms_s0_3", "epsilon_general_formula", "normalization_identity", "unit_identity",
          "epsilon_below_degree"}},
        {"flags",
         {"flag_independence", "flag_functional_identity", "flag_basis_change_unit_determinant",
          "flag_basis_multiplicative"}},
        {"perfection",
         {"perfect_pairing_certificate", "fundamental_class_coordinates", "kronecker_duality",
          "pairing_symmetry_bilinearity"}},
        {"lambda_ring",
         {"cartan_formula", "adams_ring_homomorphism", "adams_composition", "exterior_genuine",
          "newton_integrality", "lambda_top_is_det"}},
        {"restriction",
         {"joint_cyclic_restriction_injective", "restriction_commutes_with_operations",
          "restriction_naturality", "fundamental_class_restriction"}},
        {"oracle_equivalence",
         {"reduce_division_equivalence", "euler_product_equivalence", "euler_multiplicativity",
          "splitting_principle_sigma", "numeric_crosscheck_controls"}},
    };
    return manifest;
}

std::vector<std::string> required_invariants() {
    return {
        // repring
        "cartan_formula", "adams_ring_homomorphism", "adams_composition", "exterior_genuine",
        "newton_integrality", "lambda_top_is_det", "restriction_commutes_with_operations",
        "joint_cyclic_restriction_injective",
        // ktheory
        "euler_multiplicativity", "normalization_identity", "unit_identity", "closed_forms_s0_3",
        "epsilon_general_formula", "reduce_division_equivalence", "pairing_symmetry_bilinearity",
        "epsilon_below_degree", "kronecker_duality", "splitting_principle_sigma",
        "restriction_naturality", "fundamental_class_coordinates", "fundamental_class_restriction",
        "perfect_pairing_certificate",
        // flags
        "flag_independence", "flag_functional_identity", "flag_basis_change_unit_determinant",
        "flag_basis_multiplicative",
        // oracle
        "euler_product_equivalence", "numeric_crosscheck_controls",
        // tables
        "table_dim2", "table_dim3", "table_dim4", "dim4_corner_adjudication"};
}

nlohmann::json SuiteResult::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures) fails.push_back(f.to_json());
    return nlohmann::json{{"suite", name},
                          {"cases_run", cases_run},
                          {"failures", fails},
                          {"notes", notes},
                          {"passed", passed()}};
}

} // namespace ktdual
