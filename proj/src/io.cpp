#include "ttr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttr/rational.hpp"

namespace ttr {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

TwoTerminalGraph parse_ttg_text(std::istream& in) {
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> std::string {
        if (!std::getline(in, line)) fail(lineno + 1, "unexpected end of input");
        ++lineno;
        return line;
    };

    std::istringstream header(next_line());
    std::string tag;
    int n = 0, m = 0;
    if (!(header >> tag >> n >> m) || tag != "ttg")
        fail(lineno, "expected header 'ttg <n> <m>'");
    std::string trailing;
    if (header >> trailing) fail(lineno, "trailing tokens after header");

    std::istringstream terms(next_line());
    int s = -1, t = -1;
    if (!(terms >> tag >> s >> t) || tag != "terminals")
        fail(lineno, "expected 'terminals <s> <t>'");
    if (terms >> trailing) fail(lineno, "trailing tokens after terminals");
    if (s != 0 || t != 1) fail(lineno, "canonical storage requires terminals 0 1");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        std::istringstream row(next_line());
        int u = -1, v = -1;
        if (!(row >> u >> v)) fail(lineno, "expected '<u> <v>'");
        if (row >> trailing) fail(lineno, "trailing tokens after edge");
        if (!(0 <= u && u < v && v < n)) fail(lineno, "edge must satisfy 0 <= u < v < n");
        Edge e(u, v);
        if (!edges.empty() && !(edges.back() < e))
            fail(lineno, "edges must be lexicographically sorted without duplicates");
        edges.push_back(e);
    }
    try {
        return TwoTerminalGraph(n, std::move(edges), s, t);
    } catch (const std::exception& ex) {
        fail(lineno, ex.what());
    }
}

TwoTerminalGraph parse_graph_json(std::istream& in) {
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& ex) {
        throw FormatError(std::string("line 1: invalid JSON: ") + ex.what());
    }
    if (!j.contains("n") || !j.contains("terminals") || !j.contains("edges"))
        throw FormatError("line 1: JSON graph needs keys n, terminals, edges");
    int n = j.at("n").get<int>();
    auto terms = j.at("terminals");
    if (!terms.is_array() || terms.size() != 2)
        throw FormatError("line 1: terminals must be a pair");
    int s = terms[0].get<int>(), t = terms[1].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw FormatError("line 1: each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return TwoTerminalGraph(n, std::move(edges), s, t);
    } catch (const std::exception& ex) {
        throw FormatError(std::string("line 1: ") + ex.what());
    }
}

}  // namespace

TwoTerminalGraph parse_graph(std::istream& in) {
    // Sniff the first significant character: '{' selects the JSON mirror.
    int ch;
    while ((ch = in.peek()) != EOF && (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t'))
        in.get();
    if (ch == '{') return parse_graph_json(in);
    return parse_ttg_text(in);
}

TwoTerminalGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

TwoTerminalGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string emit_ttg(const TwoTerminalGraph& g) {
    std::ostringstream out;
    out << "ttg " << g.n() << " " << g.m() << "\n";
    out << "terminals " << g.s() << " " << g.t() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

std::string emit_graph_json(const TwoTerminalGraph& g) {
    ordered_json j;
    j["n"] = g.n();
    j["terminals"] = {g.s(), g.t()};
    auto edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j.dump();
}

std::string census_json(const CensusVector& c) {
    ordered_json j;
    j["d"] = c.d;
    j["m"] = c.m;
    auto counts = ordered_json::array();
    for (const auto& z : c.counts) counts.push_back(z.get_str());
    j["counts"] = std::move(counts);
    return j.dump();
}

CensusVector parse_census_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw FormatError(std::string("line 1: invalid JSON: ") + ex.what());
    }
    CensusVector c;
    c.d = j.at("d").get<int>();
    c.m = j.at("m").get<int>();
    for (const auto& s : j.at("counts")) c.counts.emplace_back(s.get<std::string>());
    if (static_cast<int>(c.counts.size()) != c.m)
        throw FormatError("line 1: counts length must equal m");
    return c;
}

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::dominates: return "dominates";
        case VerdictKind::dominated: return "dominated";
        case VerdictKind::equal: return "equal";
        case VerdictKind::crossing: return "crossing";
    }
    return "?";
}

const char* side_name(Side s) {
    switch (s) {
        case Side::first: return "first";
        case Side::second: return "second";
        case Side::tie: return "tie";
    }
    return "?";
}

std::string verdict_json(const ComparisonVerdict& v) {
    ordered_json j;
    j["kind"] = verdict_kind_name(v.kind);
    if (v.kind == VerdictKind::crossing) {
        j["witness_rho"] = rational_string(v.rho_star);
        j["sign_at_witness"] = v.sign_at_rho_star;
        j["rho_positive"] = rational_string(v.rho_pos);
        j["rho_negative"] = rational_string(v.rho_neg);
        j["isolating_interval"] = {rational_string(v.iso_lo), rational_string(v.iso_hi)};
    } else {
        j["witness_rho"] = nullptr;
    }
    j["near_one_winner"] = side_name(v.near_one_winner);
    j["near_zero_winner"] = side_name(v.near_zero_winner);
    return j.dump();
}

std::string certificate_json(const StrongerCertificate& cert) {
    ordered_json j;
    j["d"] = cert.d;
    j["verified"] = cert.verified;
    auto pack = [](const CensusVector& c) {
        auto arr = ordered_json::array();
        for (const auto& z : c.counts) arr.push_back(z.get_str());
        return arr;
    };
    j["before"] = pack(cert.before);
    j["after"] = pack(cert.after);
    return j.dump();
}

namespace {

ordered_json codes_array(int n, const std::vector<std::uint64_t>& codes) {
    auto arr = ordered_json::array();
    for (std::uint64_t c : codes) arr.push_back(CanonicalCode{n, c}.hex());
    return arr;
}

}  // namespace

std::string class_report_json(const ClassReport& r) {
    ordered_json j;
    j["schema"] = "ttr-class-report/1";
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d;
    j["class_size"] = r.class_size.get_str();
    j["lmrttg_near_1"] = codes_array(r.n, r.lmrttg_near_1);
    j["lmrttg_near_0"] = codes_array(r.n, r.lmrttg_near_0);
    ordered_json u;
    switch (r.umrttg.kind) {
        case UmrttgOutcome::Kind::exists:
            u["kind"] = "exists";
            u["winners"] = codes_array(r.n, r.umrttg.winners);
            break;
        case UmrttgOutcome::Kind::not_exists: {
            u["kind"] = "not_exists";
            ordered_json w;
            w["candidate"] = CanonicalCode{r.n, r.umrttg.witness->candidate_code}.hex();
            w["member"] = CanonicalCode{r.n, r.umrttg.witness->member_code}.hex();
            w["verdict"] = ordered_json::parse(verdict_json(r.umrttg.witness->verdict));
            u["witness"] = std::move(w);
            break;
        }
        case UmrttgOutcome::Kind::undecided:
            u["kind"] = "undecided";
            u["reason"] = r.umrttg.reason;
            break;
    }
    j["umrttg"] = std::move(u);
    return j.dump(2);
}

std::string crossing_report_json(const CrossingReport& r) {
    ordered_json j;
    j["schema"] = "ttr-crossing-report/1";
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d;
    j["rho"] = rational_string(r.rho);
    j["g_family"] = r.g_family;
    j["h_family"] = r.h_family;
    j["reliability_g"] = rational_string(r.reliability_g);
    j["reliability_h"] = rational_string(r.reliability_h);
    j["strict_inequality"] = r.strict_inequality;
    j["near1_h_beats_g"] = r.near1_h_beats_g;
    j["boundary_rho"] = r.boundary_rho;
    j["ok"] = r.ok;
    return j.dump(2);
}

std::string audit_report_json(const AuditReport& r) {
    ordered_json j;
    j["schema"] = "ttr-audit-report/1";
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d;
    j["members_checked"] = r.members_checked;
    j["survivors"] = r.survivors;
    j["ok"] = r.ok;
    j["violations"] = r.violations;
    return j.dump(2);
}

std::string n4_report_json(const N4Report& r) {
    ordered_json j;
    j["schema"] = "ttr-n4-report/1";
    j["n"] = r.n;
    j["m"] = r.m;
    j["members_checked"] = r.members_checked;
    j["ok"] = r.ok;
    j["mismatches"] = r.mismatches;
    return j.dump(2);
}

std::string class_census_csv(const std::vector<ClassMemberCensus>& members) {
    std::ostringstream out;
    out << "canonical_code";
    if (!members.empty())
        for (int i = 1; i <= members.front().census.m; ++i) out << ",N_" << i;
    out << "\n";
    for (const auto& mm : members) {
        out << CanonicalCode{mm.graph.n(), mm.code}.hex();
        for (const auto& z : mm.census.counts) out << "," << z.get_str();
        out << "\n";
    }
    return out.str();
}

}  // namespace ttr
