#include "ttr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "ttr/rational.hpp"

namespace ttr {

namespace {

int effective_workers(int requested) {
    if (requested > 0) return std::min(requested, 64);
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace

std::vector<ClassMemberCensus> class_censuses(ClassCatalog& catalog, int n, int m, int d,
                                              const SearchOptions& opts) {
    const auto& codes = catalog.codes(n, m);
    std::vector<ClassMemberCensus> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes)
        out.push_back(ClassMemberCensus{code, graph_from_word(code, n), CensusVector{}});

    int workers = std::min<std::size_t>(effective_workers(opts.workers), codes.size());
    if (workers <= 1) {
        for (auto& member : out)
            member.census = census(member.graph, d, CensusBackend::auto_select, opts.census);
        return out;
    }
    CensusOptions inner = opts.census;
    inner.workers = 1;  // parallelism lives at the member level here
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= out.size()) return;
                try {
                    out[i].census =
                        census(out[i].graph, d, CensusBackend::auto_select, inner);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<std::size_t> filtration_survivors(const std::vector<ClassMemberCensus>& members,
                                              FiltrationDirection dir) {
    std::vector<std::size_t> alive(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) alive[i] = i;
    if (members.empty()) return alive;
    const int m = members.front().census.m;

    auto filter_by = [&](int count_index) {
        const mpz_class* best = nullptr;
        for (std::size_t i : alive) {
            const mpz_class& c = members[i].census.counts[static_cast<std::size_t>(count_index)];
            if (!best || c > *best) best = &c;
        }
        std::vector<std::size_t> kept;
        for (std::size_t i : alive)
            if (members[i].census.counts[static_cast<std::size_t>(count_index)] == *best)
                kept.push_back(i);
        alive = std::move(kept);
    };

    if (dir == FiltrationDirection::near1) {
        for (int i = 1; i <= m; ++i) filter_by(i - 1);
    } else {
        for (int i = m; i >= 1; --i) filter_by(i - 1);
    }
    return alive;
}

std::vector<std::uint64_t> lmrttg_filtration(ClassCatalog& catalog, int n, int m, int d,
                                             FiltrationDirection dir,
                                             const SearchOptions& opts) {
    auto members = class_censuses(catalog, n, m, d, opts);
    std::vector<std::uint64_t> codes;
    for (std::size_t i : filtration_survivors(members, dir)) codes.push_back(members[i].code);
    return codes;
}

ClassReport umrttg_decide(ClassCatalog& catalog, int n, int m, int d,
                          const SearchOptions& opts) {
    auto started = std::chrono::steady_clock::now();
    ClassReport report;
    report.n = n;
    report.m = m;
    report.d = d;

    auto members = class_censuses(catalog, n, m, d, opts);
    report.class_size = static_cast<unsigned long>(members.size());

    auto near1 = filtration_survivors(members, FiltrationDirection::near1);
    auto near0 = filtration_survivors(members, FiltrationDirection::near0);
    for (std::size_t i : near1) report.lmrttg_near_1.push_back(members[i].code);
    for (std::size_t i : near0) report.lmrttg_near_0.push_back(members[i].code);

    std::vector<std::size_t> candidates;
    std::set_intersection(near1.begin(), near1.end(), near0.begin(), near0.end(),
                          std::back_inserter(candidates));

    // Candidates must beat (or tie) every class member, not only the other
    // survivors: a crossing may involve a non-candidate.
    for (std::size_t c : candidates) {
        bool winner = true;
        for (std::size_t j = 0; j < members.size() && winner; ++j) {
            if (j == c) continue;
            ComparisonVerdict v = compare_on_unit_interval(members[c].census, members[j].census);
            if (v.kind == VerdictKind::dominates || v.kind == VerdictKind::equal) continue;
            winner = false;
            if (v.kind == VerdictKind::crossing && !report.umrttg.witness) {
                report.umrttg.witness =
                    CrossingWitness{members[c].code, members[j].code, v};
            }
        }
        if (winner) report.umrttg.winners.push_back(members[c].code);
    }

    if (!report.umrttg.winners.empty()) {
        report.umrttg.kind = UmrttgOutcome::Kind::exists;
    } else if (report.umrttg.witness) {
        report.umrttg.kind = UmrttgOutcome::Kind::not_exists;
    } else {
        // No candidate won and no crossing surfaced during the aborted
        // scans; finish the scans to certify the nonexistence.
        for (std::size_t c : candidates) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (j == c) continue;
                ComparisonVerdict v =
                    compare_on_unit_interval(members[c].census, members[j].census);
                if (v.kind == VerdictKind::crossing) {
                    report.umrttg.witness =
                        CrossingWitness{members[c].code, members[j].code, v};
                    break;
                }
            }
            if (report.umrttg.witness) break;
        }
        if (report.umrttg.witness) {
            report.umrttg.kind = UmrttgOutcome::Kind::not_exists;
        } else {
            report.umrttg.kind = UmrttgOutcome::Kind::undecided;
            report.umrttg.reason = "no winning candidate and no crossing certificate";
        }
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

CrossingReport verify_crossing_witness(int n, int m, int d, const mpq_class& rho,
                                       const SearchOptions& opts) {
    if (n < 11 || m < 20 || m > 3 * n - 9)
        throw ParameterError("crossing check requires n >= 11 and 20 <= m <= 3n-9");
    if (d < 4) throw ParameterError("crossing check requires d >= 4");
    if (rho < 0 || rho > 1) throw ParameterError("rho must lie in [0,1]");

    CrossingReport r;
    r.n = n;
    r.m = m;
    r.d = d;
    r.rho = rho;

    TwoTerminalGraph g = construct_family_G(n, m);
    const int core = g.degree(g.s()) + 1;  // family-A core order
    const int chords = m - 2 * core + 3;
    r.g_family = "G(" + std::to_string(n) + "," + std::to_string(m) + ") = A(" +
                 std::to_string(core) + "," + std::to_string(chords) + ") + " +
                 std::to_string(n - core) + " isolated";

    TwoTerminalGraph h = (m <= 2 * n - 3)
                             ? construct_family_H(n, m)
                             : construct_family_A(n, m - 2 * n + 3);
    r.h_family = (m <= 2 * n - 3)
                     ? "H(" + std::to_string(n) + "," + std::to_string(m) + ")"
                     : "A(" + std::to_string(n) + "," + std::to_string(m - 2 * n + 3) + ")";

    CensusVector cg = census(g, d, CensusBackend::auto_select, opts.census);
    CensusVector ch = census(h, d, CensusBackend::auto_select, opts.census);
    r.reliability_g = evaluate_reliability(cg, rho);
    r.reliability_h = evaluate_reliability(ch, rho);
    r.strict_inequality = r.reliability_g > r.reliability_h;
    r.near1_h_beats_g = lex_compare_near1(ch, cg) > 0;
    r.boundary_rho = (rho == 0 || rho == 1);
    r.ok = r.strict_inequality && r.near1_h_beats_g;
    return r;
}

AuditReport audit_near0_structure(ClassCatalog& catalog, int n, int m, int d,
                                  const SearchOptions& opts) {
    if (d < 3 || n < 6 || m < 3 * n - 5 || m > n * (n - 1) / 2)
        throw ParameterError("near-0 audit requires d >= 3, n >= 6, 3n-5 <= m <= C(n,2)");

    AuditReport r;
    r.n = n;
    r.m = m;
    r.d = d;

    auto members = class_censuses(catalog, n, m, d, opts);
    r.members_checked = static_cast<int>(members.size());
    auto survivors = filtration_survivors(members, FiltrationDirection::near0);
    r.survivors = static_cast<int>(survivors.size());

    auto complain = [&](std::uint64_t code, const std::string& what) {
        r.violations.push_back(CanonicalCode{n, code}.hex() + ": " + what);
    };

    for (std::size_t i : survivors) {
        const auto& mm = members[i];
        if (!terminals_universal(mm.graph))
            complain(mm.code, "near-0 survivor without universal terminals");
        if (!almost_regular(hat_graph(mm.graph)))
            complain(mm.code, "near-0 survivor with hat graph not almost-regular");
        CutsetStats st = cutset_stats_from_census(mm.census);
        if (st.lambda_st != n - 1)
            complain(mm.code, "near-0 survivor with lambda_st != n-1");
    }

    for (const auto& mm : members) {
        CutsetStats st = cutset_stats_from_census(mm.census);
        const bool universal = terminals_universal(mm.graph);
        if (!universal) {
            if (st.lambda_st > n - 2)
                complain(mm.code, "non-universal member with lambda_st > n-2");
            continue;
        }
        if (st.lambda_st != n - 1)
            complain(mm.code, "universal member with lambda_st != n-1");
        const int lam_hat = edge_connectivity(hat_graph(mm.graph));
        for (int i = 1; i <= lam_hat; ++i) {
            mpz_class expected = 2 * binomial(static_cast<unsigned long>(m - n + 1),
                                              static_cast<unsigned long>(i - 1));
            if (st.B[static_cast<std::size_t>(n - 2 + i - 1)] != expected)
                complain(mm.code, "B_{n-2+" + std::to_string(i) + "} != 2 C(m-n+1," +
                                      std::to_string(i - 1) + ")");
        }
        mpz_class bound = 2 * binomial(static_cast<unsigned long>(m - n + 1),
                                       static_cast<unsigned long>(lam_hat));
        if (!(st.B[static_cast<std::size_t>(n - 2 + lam_hat)] > bound))
            complain(mm.code, "B at n-1+lambda(hat) lacks strict excess");
    }

    r.ok = r.violations.empty();
    return r;
}

N4Report verify_N4_formula(ClassCatalog& catalog, int n, int m, const SearchOptions& opts) {
    if (n < 6 || m <= 3 * n - 6 || m > n * (n - 1) / 2 - 2)
        throw ParameterError("N4 check requires n >= 6 and 3n-6 < m <= C(n,2)-2");

    N4Report r;
    r.n = n;
    r.m = m;

    for (const auto& g : catalog.enumerate_class(n, m)) {
        if (!terminals_universal(g)) continue;
        ++r.members_checked;
        CensusVector c = census(g, n - 1, CensusBackend::auto_select, opts.census);
        mpz_class n4 = c.counts[3];
        mpz_class expected =
            binomial(static_cast<unsigned long>(m - 1), 3) +
            mpz_class(n - 2) * binomial(static_cast<unsigned long>(m - 3), 2) -
            binomial(static_cast<unsigned long>(n - 2), 2) +
            mpz_class(2) * (m - 2 * n + 3) * (m - 6) + 2 * count_p3(hat_graph(g));
        if (n4 != expected) {
            r.mismatches.push_back(canonical_code(g).hex() + ": N_4 = " + n4.get_str() +
                                   " but closed form gives " + expected.get_str());
        }
    }
    r.ok = r.mismatches.empty();
    return r;
}

}  // namespace ttr
