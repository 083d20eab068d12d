#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ktdual/render.hpp"

using namespace ktdual;

namespace {

struct Options {
    std::string group;
    std::string rep;
    std::string format = "text";
    std::string out;
    std::string suite = "all";
    uint64_t seed = 0;
    long smax = -1;
    int dim = 0;
    bool list_flags = false;
    bool verify_flags = false;
    bool verbose = false;
};

std::vector<std::string> table_search_dirs() {
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("KTDUAL_TABLE_PATH")) {
        std::stringstream ss(env);
        std::string dir;
        while (std::getline(ss, dir, ':'))
            if (!dir.empty()) dirs.push_back(dir);
    }
    return dirs;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UserError("cannot open output file '" + out_path + "'");
    out << text;
}

KContextPtr make_context(const Options& o) {
    if (o.group.empty() || o.rep.empty()) throw UserError("both --group and --rep are required");
    GroupPtr g = resolve_group(o.group, table_search_dirs());
    return KContext::create(parse_rep(g, o.rep), o.smax);
}

void add_common(CLI::App* cmd, Options& o, bool need_group = true) {
    if (need_group) {
        cmd->add_option("--group", o.group, "builtin name (c<n>, d<n>, s3, s4, q8, products via 'x') or table file");
        cmd->add_option("--rep", o.rep, "representation, e.g. \"triv+2*std\" with labels from the character table");
    }
    cmd->add_option("--format", o.format, "output format: text, json or latex")->default_val("text");
    cmd->add_option("--out", o.out, "write output to this path instead of stdout");
    cmd->add_option("--seed", o.seed, "seed for randomized suites")->default_val(0);
    cmd->add_option("--smax", o.smax, "reduction-table depth to precompute")->default_val(-1);
    cmd->add_flag("--verbose", o.verbose, "include timings in verify output");
}

int cmd_euler(const Options& o) {
    if (o.group.empty() || o.rep.empty()) throw UserError("both --group and --rep are required");
    GroupPtr g = resolve_group(o.group, table_search_dirs());
    emit(render_euler(parse_rep(g, o.rep), parse_format(o.format)), o.out);
    return 0;
}

int cmd_sigma(const Options& o) {
    emit(render_sigma(make_context(o), parse_format(o.format)), o.out);
    return 0;
}

int cmd_pairing(const Options& o) {
    if (o.dim > 0) {
        GenericTables t(o.dim, o.smax);
        emit(render_generic_table(t, parse_format(o.format)), o.out);
        return 0;
    }
    KContextPtr ctx = make_context(o);
    PerfectionCertificate cert = verify_perfect(ctx);
    emit(render_concrete_pairing(ctx, cert, parse_format(o.format)), o.out);
    return cert.perfect ? 0 : 1;
}

int cmd_fundamental(const Options& o) {
    emit(render_fundamental(make_context(o), parse_format(o.format)), o.out);
    return 0;
}

int cmd_flags(const Options& o) {
    KContextPtr ctx = make_context(o);
    if (o.list_flags) {
        emit(render_flag_listing(ctx, parse_format(o.format)), o.out);
        return 0;
    }
    FlagIndependenceReport report = verify_flag_independence(ctx);
    emit(render_flags_report(ctx, report, parse_format(o.format)), o.out);
    return report.independent ? 0 : 1;
}

int cmd_verify(const Options& o) {
    std::vector<SuiteCase> scope;
    if (!o.group.empty()) {
        if (o.rep.empty()) throw UserError("--rep is required when --group is given");
        GroupPtr g = resolve_group(o.group, table_search_dirs());
        scope.push_back(make_case(g, o.rep));
    } else {
        scope = default_scope();
    }
    std::vector<SuiteResult> results;
    if (o.suite == "all") {
        results = run_all_suites(scope, o.seed);
    } else {
        results.push_back(run_suite(o.suite, scope, o.seed));
    }
    emit(render_suite_results(results, parse_format(o.format), o.verbose), o.out);
    bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ktdual - exact equivariant K-theory of complex projective spaces:\n"
        "K^0_G(CP(V)) = R(G)[z]/chi(V(x)z), its duality pairing, dual and flag\n"
        "bases, and the invariant suites that verify them."};
    app.require_subcommand(1);

    Options o;
    CLI::App* euler = app.add_subcommand("euler", "print the Euler class chi(V (x) z)");
    add_common(euler, o);
    CLI::App* sigma = app.add_subcommand("sigma", "print the sigma coefficients and delta*");
    add_common(sigma, o);
    CLI::App* pairing = app.add_subcommand("pairing", "print the duality pairing table");
    add_common(pairing, o);
    pairing->add_option("--dim", o.dim, "render the generic symbolic table for this dimension instead");
    CLI::App* fundamental =
        app.add_subcommand("fundamental", "print the fundamental class 1/chi(V(x)z) in beta coordinates");
    add_common(fundamental, o);
    CLI::App* flags = app.add_subcommand("flags", "flag bases of abelian contexts");
    add_common(flags, o);
    flags->add_flag("--list", o.list_flags, "list every flag and its basis");
    flags->add_flag("--verify", o.verify_flags, "check flag independence (default)");
    CLI::App* verify = app.add_subcommand("verify", "run invariant suites (exit 0 pass / 1 fail)");
    add_common(verify, o);
    verify->add_option("--suite", o.suite,
                       "tables, closed_forms, flags, perfection, lambda_ring, restriction, "
                       "oracle_equivalence, or all")
        ->default_val("all");

    try {
        app.parse(argc, argv);
        if (euler->parsed()) return cmd_euler(o);
        if (sigma->parsed()) return cmd_sigma(o);
        if (pairing->parsed()) return cmd_pairing(o);
        if (fundamental->parsed()) return cmd_fundamental(o);
        if (flags->parsed()) return cmd_flags(o);
        if (verify->parsed()) return cmd_verify(o);
        throw UserError("no subcommand given");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
