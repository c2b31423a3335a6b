// ttrlab: exact computations on distance-constrained two-terminal reliability.
// Subcommands construct graphs, run censuses, compare reliability polynomials,
// enumerate classes, apply certified transforms, and drive the named
// verification suites. All numeric output is exact rational text.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ttr/enumerate.hpp"
#include "ttr/io.hpp"
#include "ttr/polynomial.hpp"
#include "ttr/rational.hpp"
#include "ttr/search.hpp"
#include "ttr/suites.hpp"
#include "ttr/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct GlobalFlags {
    int workers = 0;
    std::uint64_t seed = 20250809;
    int subset_cap_m = 28;
    int enum_n_cap = 8;
    std::size_t path_mask_cap = std::size_t{1} << 20;

    ttr::CensusOptions census() const {
        ttr::CensusOptions c;
        c.workers = workers;
        c.subset_cap_m = subset_cap_m;
        c.path_mask_cap = path_mask_cap;
        return c;
    }
    ttr::SearchOptions search() const {
        ttr::SearchOptions s;
        s.census = census();
        s.workers = workers;
        return s;
    }
};

ttr::TwoTerminalGraph read_graph(const std::string& path) {
    if (path.empty() || path == "-") return ttr::parse_graph(std::cin);
    return ttr::load_graph_file(path);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw ttr::FormatError("cannot open output file: " + path);
    out << text;
}

ttr::CensusBackend backend_from_name(const std::string& name) {
    if (name == "subset-enum") return ttr::CensusBackend::subset_enum;
    if (name == "path-inclusion-exclusion" || name == "paths")
        return ttr::CensusBackend::path_ie;
    if (name == "auto") return ttr::CensusBackend::auto_select;
    throw ttr::ParameterError("unknown backend: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distance-constrained two-terminal reliability lab"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_option("--workers", flags.workers, "worker threads (0 = auto)");
    app.add_option("--seed", flags.seed, "seed for randomized suites");
    app.add_option("--max-subset-m", flags.subset_cap_m, "subset-enum cap on m");
    app.add_option("--max-enum-n", flags.enum_n_cap, "class enumeration cap on n");
    app.add_option("--max-paths", flags.path_mask_cap, "path enumeration cap");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named family member");
    std::string family;
    int c_n = 0, c_m = -1, c_r = -1, c_nprime = -1;
    std::string c_out;
    bool c_json = false;
    construct->add_option("--family", family, "A, H, or G")->required();
    construct->add_option("--n", c_n, "vertex count")->required();
    construct->add_option("--m", c_m, "edge count (families H, G)");
    construct->add_option("--r", c_r, "chord count (family A)");
    construct->add_option("--nprime", c_nprime, "core order override (family G)");
    construct->add_option("--out", c_out, "output file (default stdout)");
    construct->add_flag("--json", c_json, "emit the JSON mirror instead of TTG");

    // census
    auto* census_cmd = app.add_subcommand("census", "exact pathset census");
    std::string s_graph, s_backend = "auto", s_out;
    int s_d = 0;
    census_cmd->add_option("graph", s_graph, "graph file (TTG or JSON, - for stdin)");
    census_cmd->add_option("--d", s_d, "distance bound")->required();
    census_cmd->add_option("--backend", s_backend, "subset-enum | paths | auto");
    census_cmd->add_option("--out", s_out, "output file");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate reliability at exact rationals");
    std::string e_graph;
    int e_d = 0;
    std::vector<std::string> e_rhos;
    eval_cmd->add_option("graph", e_graph, "graph file");
    eval_cmd->add_option("--d", e_d, "distance bound")->required();
    eval_cmd->add_option("--rho", e_rhos, "rho as p/q (repeatable)")->required();

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "compare two graphs on [0,1]");
    std::string g1_path, g2_path;
    int cmp_d = 0;
    compare_cmd->add_option("first", g1_path, "first graph file")->required();
    compare_cmd->add_option("second", g2_path, "second graph file")->required();
    compare_cmd->add_option("--d", cmp_d, "distance bound")->required();

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "stream one graph per class");
    int en_n = 0, en_m = 0;
    bool en_count_only = false;
    std::string en_out;
    enum_cmd->add_option("--n", en_n, "vertex count")->required();
    enum_cmd->add_option("--m", en_m, "edge count")->required();
    enum_cmd->add_flag("--count-only", en_count_only, "print only the class size");
    enum_cmd->add_option("--out", en_out, "output file");

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "apply a certified transform");
    std::string t_op, t_graph, t_out, t_cert_out;
    int t_edge = -1, t_d = 3;
    transform_cmd->add_option("op", t_op, "st-swap | twin-terminals | normalize")->required();
    transform_cmd->add_option("graph", t_graph, "graph file");
    transform_cmd->add_option("--edge", t_edge, "edge index (st-swap)");
    transform_cmd->add_option("--d", t_d, "distance bound (st-swap)");
    transform_cmd->add_option("--out", t_out, "graph output file");
    transform_cmd->add_option("--cert", t_cert_out, "certificate output file");

    // lmrttg
    auto* lm_cmd = app.add_subcommand("lmrttg", "locally-most-reliable filtration");
    int lm_n = 0, lm_m = 0, lm_d = 0;
    std::string lm_dir = "near1", lm_csv;
    lm_cmd->add_option("--n", lm_n)->required();
    lm_cmd->add_option("--m", lm_m)->required();
    lm_cmd->add_option("--d", lm_d)->required();
    lm_cmd->add_option("--direction", lm_dir, "near1 | near0");
    lm_cmd->add_option("--csv", lm_csv, "write the class census table");

    // umrttg
    auto* um_cmd = app.add_subcommand("umrttg", "decide uniform optimality over a class");
    int um_n = 0, um_m = 0, um_d = 0;
    std::string um_csv, um_report;
    um_cmd->add_option("--n", um_n)->required();
    um_cmd->add_option("--m", um_m)->required();
    um_cmd->add_option("--d", um_d)->required();
    um_cmd->add_option("--csv", um_csv, "write the class census table");
    um_cmd->add_option("--report", um_report, "write the class report JSON");

    // audit-near0
    auto* audit_cmd = app.add_subcommand("audit-near0", "audit near-0 structure classwide");
    int au_n = 0, au_m = 0, au_d = 0;
    audit_cmd->add_option("--n", au_n)->required();
    audit_cmd->add_option("--m", au_m)->required();
    audit_cmd->add_option("--d", au_d)->required();

    // verify-n4
    auto* n4_cmd = app.add_subcommand("verify-n4", "check the N_4 closed form classwide");
    int n4_n = 0, n4_m = 0;
    n4_cmd->add_option("--n", n4_n)->required();
    n4_cmd->add_option("--m", n4_m)->required();

    // verify-crossing
    auto* cross_cmd = app.add_subcommand("verify-crossing", "check the paired crossing witness");
    int cr_n = 0, cr_m = 0, cr_d = 0;
    std::string cr_rho = "1/2";
    cross_cmd->add_option("--n", cr_n)->required();
    cross_cmd->add_option("--m", cr_m)->required();
    cross_cmd->add_option("--d", cr_d)->required();
    cross_cmd->add_option("--rho", cr_rho, "exact rational in [0,1]");

    // verify-suite
    auto* suite_cmd = app.add_subcommand("verify-suite", "run a named verification suite");
    std::string suite_name;
    suite_cmd->add_option("name", suite_name, "suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*construct) {
            ttr::TwoTerminalGraph g = [&]() {
                if (family == "A") {
                    if (c_r < 0) throw ttr::ParameterError("family A needs --r");
                    return ttr::construct_family_A(c_n, c_r);
                }
                if (family == "H") {
                    if (c_m < 0) throw ttr::ParameterError("family H needs --m");
                    return ttr::construct_family_H(c_n, c_m);
                }
                if (family == "G") {
                    if (c_m < 0) throw ttr::ParameterError("family G needs --m");
                    return ttr::construct_family_G(c_n, c_m, c_nprime);
                }
                throw ttr::ParameterError("unknown family: " + family);
            }();
            write_output(c_out, c_json ? ttr::emit_graph_json(g) : ttr::emit_ttg(g));
            return kExitOk;
        }

        if (*census_cmd) {
            ttr::TwoTerminalGraph g = read_graph(s_graph);
            ttr::CensusVector c =
                ttr::census(g, s_d, backend_from_name(s_backend), flags.census());
            write_output(s_out, ttr::census_json(c));
            return kExitOk;
        }

        if (*eval_cmd) {
            ttr::TwoTerminalGraph g = read_graph(e_graph);
            ttr::CensusVector c = ttr::census(g, e_d, ttr::CensusBackend::auto_select,
                                              flags.census());
            for (const auto& rs : e_rhos) {
                mpq_class rho = ttr::parse_rational(rs);
                std::cout << "rho=" << ttr::rational_string(rho)
                          << " R=" << ttr::rational_string(ttr::evaluate_reliability(c, rho))
                          << " U=" << ttr::rational_string(ttr::evaluate_unreliability(c, rho))
                          << "\n";
            }
            return kExitOk;
        }

        if (*compare_cmd) {
            ttr::TwoTerminalGraph a = read_graph(g1_path);
            ttr::TwoTerminalGraph b = read_graph(g2_path);
            ttr::CensusVector ca =
                ttr::census(a, cmp_d, ttr::CensusBackend::auto_select, flags.census());
            ttr::CensusVector cb =
                ttr::census(b, cmp_d, ttr::CensusBackend::auto_select, flags.census());
            std::cout << ttr::verdict_json(ttr::compare_on_unit_interval(ca, cb)) << "\n";
            return kExitOk;
        }

        if (*enum_cmd) {
            ttr::ClassCatalog catalog(flags.enum_n_cap);
            if (en_count_only) {
                std::cout << catalog.class_size(en_n, en_m).get_str() << "\n";
                return kExitOk;
            }
            std::ostringstream out;
            bool first = true;
            for (const auto& g : catalog.enumerate_class(en_n, en_m)) {
                if (!first) out << "\n";
                out << ttr::emit_ttg(g);
                first = false;
            }
            write_output(en_out, out.str());
            return kExitOk;
        }

        if (*transform_cmd) {
            ttr::TwoTerminalGraph g = read_graph(t_graph);
            ttr::TransformResult r = [&]() {
                if (t_op == "st-swap") {
                    if (t_edge < 0) throw ttr::ParameterError("st-swap needs --edge");
                    return ttr::st_swap(g, t_edge, t_d, flags.census());
                }
                if (t_op == "twin-terminals") return ttr::twin_terminals(g, flags.census());
                if (t_op == "normalize") return ttr::normalize_to_Tstar(g, flags.census());
                throw ttr::ParameterError("unknown transform: " + t_op);
            }();
            if (!r.applied)
                std::cerr << "no-op: input already has the target shape\n";
            write_output(t_out, ttr::emit_ttg(r.graph));
            std::string cert = ttr::certificate_json(r.certificate);
            if (t_cert_out.empty()) {
                if (t_out.empty() || t_out == "-") std::cout << "\n";
                std::cout << cert << "\n";
            } else {
                write_output(t_cert_out, cert);
            }
            return kExitOk;
        }

        if (*lm_cmd) {
            ttr::ClassCatalog catalog(flags.enum_n_cap);
            auto dir = lm_dir == "near0" ? ttr::FiltrationDirection::near0
                                         : ttr::FiltrationDirection::near1;
            if (lm_dir != "near0" && lm_dir != "near1")
                throw ttr::ParameterError("direction must be near1 or near0");
            if (!lm_csv.empty()) {
                auto members = ttr::class_censuses(catalog, lm_n, lm_m, lm_d, flags.search());
                write_output(lm_csv, ttr::class_census_csv(members));
            }
            auto codes = ttr::lmrttg_filtration(catalog, lm_n, lm_m, lm_d, dir, flags.search());
            for (std::uint64_t code : codes)
                std::cout << ttr::CanonicalCode{lm_n, code}.hex() << "\n";
            return kExitOk;
        }

        if (*um_cmd) {
            ttr::ClassCatalog catalog(flags.enum_n_cap);
            if (!um_csv.empty()) {
                auto members = ttr::class_censuses(catalog, um_n, um_m, um_d, flags.search());
                write_output(um_csv, ttr::class_census_csv(members));
            }
            ttr::ClassReport report =
                ttr::umrttg_decide(catalog, um_n, um_m, um_d, flags.search());
            std::string json = ttr::class_report_json(report);
            if (!um_report.empty()) write_output(um_report, json);
            std::cout << json << "\n";
            std::cerr << "decided in " << report.seconds << " s\n";
            return report.umrttg.kind == ttr::UmrttgOutcome::Kind::undecided ? kExitInternal
                                                                             : kExitOk;
        }

        if (*audit_cmd) {
            ttr::ClassCatalog catalog(flags.enum_n_cap);
            ttr::AuditReport r =
                ttr::audit_near0_structure(catalog, au_n, au_m, au_d, flags.search());
            std::cout << ttr::audit_report_json(r) << "\n";
            return r.ok ? kExitOk : kExitViolation;
        }

        if (*n4_cmd) {
            ttr::ClassCatalog catalog(flags.enum_n_cap);
            ttr::N4Report r = ttr::verify_N4_formula(catalog, n4_n, n4_m, flags.search());
            std::cout << ttr::n4_report_json(r) << "\n";
            return r.ok ? kExitOk : kExitViolation;
        }

        if (*cross_cmd) {
            mpq_class rho = ttr::parse_rational(cr_rho);
            ttr::CrossingReport r =
                ttr::verify_crossing_witness(cr_n, cr_m, cr_d, rho, flags.search());
            std::cout << ttr::crossing_report_json(r) << "\n";
            if (r.boundary_rho) return kExitOk;  // strictness impossible; reported as such
            return r.ok ? kExitOk : kExitViolation;
        }

        if (*suite_cmd) {
            ttr::SuiteOptions opts;
            opts.seed = flags.seed;
            opts.workers = flags.workers;
            opts.census = flags.census();
            std::vector<std::string> names;
            if (suite_name == "all")
                names = ttr::suite_names();
            else
                names.push_back(suite_name);
            bool all_ok = true;
            for (const auto& name : names) {
                ttr::SuiteResult r = ttr::run_suite(name, opts);
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
                          << r.seconds << " s)\n";
                for (const auto& note : r.notes)
                    if (!r.passed || names.size() == 1) std::cout << "  " << note << "\n";
                all_ok &= r.passed;
            }
            return all_ok ? kExitOk : kExitViolation;
        }
    } catch (const ttr::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ttr::BackendInfeasibleError& e) {
        std::cerr << "backend infeasible: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ttr::InternalInvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
