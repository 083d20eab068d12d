#ifndef KTDUAL_RENDER_HPP
#define KTDUAL_RENDER_HPP

#include "ktdual/flags.hpp"
#include "ktdual/symbolic.hpp"
#include "ktdual/verify.hpp"

namespace ktdual {

enum class OutputFormat { text, json, latex };

OutputFormat parse_format(const std::string& s);

/// Pairing table over a generic n-dimensional representation, entries in
/// the vocabulary 1, δ*, V*, λ^k(V*).
std::string render_generic_table(const GenericTables& t, OutputFormat f);

/// Pairing table, sigma coefficients and perfection certificate for a
/// concrete (G, V). The JSON form follows
/// {group, rep, n, sigma, gram, perfect, inverse}.
std::string render_concrete_pairing(const KContextPtr& ctx, const PerfectionCertificate& cert,
                                    OutputFormat f);

std::string render_sigma(const KContextPtr& ctx, OutputFormat f);
std::string render_euler(const VirtualCharacter& v, OutputFormat f);
std::string render_fundamental(const KContextPtr& ctx, OutputFormat f);
std::string render_flags_report(const KContextPtr& ctx, const FlagIndependenceReport& report,
                                OutputFormat f);
std::string render_flag_listing(const KContextPtr& ctx, OutputFormat f);
std::string render_suite_results(const std::vector<SuiteResult>& results, OutputFormat f, bool verbose);

} // namespace ktdual

#endif
