#pragma once

#include <iosfwd>
#include <string>

#include "ttr/census.hpp"
#include "ttr/graph.hpp"
#include "ttr/polynomial.hpp"
#include "ttr/search.hpp"
#include "ttr/transforms.hpp"

namespace ttr {

// TTG text format (canonical interchange):
//   ttg <n> <m>
//   terminals 0 1
//   <u> <v>        (m lines, 0 <= u < v < n, lexicographically sorted)
// A JSON mirror {"n":..,"terminals":[0,1],"edges":[[u,v],..]} is accepted on
// input (sniffed by a leading '{') and produced on request.

TwoTerminalGraph parse_graph(std::istream& in);
TwoTerminalGraph parse_graph_string(const std::string& text);
TwoTerminalGraph load_graph_file(const std::string& path);

std::string emit_ttg(const TwoTerminalGraph& g);
std::string emit_graph_json(const TwoTerminalGraph& g);

/// {"d":..,"m":..,"counts":["<decimal>",..]} — decimal strings keep the
/// big integers lossless.
std::string census_json(const CensusVector& c);
CensusVector parse_census_json(const std::string& text);

std::string verdict_json(const ComparisonVerdict& v);
std::string certificate_json(const StrongerCertificate& cert);
std::string class_report_json(const ClassReport& r);
std::string crossing_report_json(const CrossingReport& r);
std::string audit_report_json(const AuditReport& r);
std::string n4_report_json(const N4Report& r);

/// CSV table "canonical_code,N_1,...,N_m", one row per class member.
std::string class_census_csv(const std::vector<ClassMemberCensus>& members);

const char* verdict_kind_name(VerdictKind k);
const char* side_name(Side s);

}  // namespace ttr
