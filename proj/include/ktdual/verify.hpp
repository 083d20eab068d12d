#ifndef KTDUAL_VERIFY_HPP
#define KTDUAL_VERIFY_HPP

#include <cstdint>
#include <map>

#include "ktdual/flags.hpp"
#include "ktdual/oracle.hpp"

namespace ktdual {

struct SuiteCase {
    GroupPtr group;
    VirtualCharacter rep;
    std::string label; // "<group>:<rep>"
};

struct SuiteResult {
    std::string name;
    long cases_run = 0;
    std::vector<OracleReport> failures;
    std::vector<std::string> notes; // flagged findings that are not failures
    double elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// Names: tables, closed_forms, flags, perfection, lambda_ring, restriction,
/// oracle_equivalence.
const std::vector<std::string>& suite_names();

/// The spec'd default scope: {c1, c2, c3, c4, c6, c2xc2, c5, s3, d4, q8}
/// with representations of dimension 1..4 drawn from irreducibles.
std::vector<SuiteCase> default_scope();

SuiteCase make_case(const GroupPtr& g, const std::string& rep_spec);

/// Runs one named suite over the scope. Cases run concurrently; results are
/// aggregated deterministically in case order. Failures are data, never
/// exceptions.
SuiteResult run_suite(const std::string& name, const std::vector<SuiteCase>& scope, uint64_t seed = 0);

std::vector<SuiteResult> run_all_suites(const std::vector<SuiteCase>& scope, uint64_t seed = 0);

/// Which named invariants each suite covers. The union over all suites is
/// asserted (in tests) to equal required_invariants().
const std::map<std::string, std::vector<std::string>>& coverage_manifest();

/// Every invariant named by the modules repring, ktheory, flags, oracle.
std::vector<std::string> required_invariants();

} // namespace ktdual

#endif
