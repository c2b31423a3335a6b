#include "ttr/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "ttr/rational.hpp"

namespace ttr {

namespace {

int effective_workers(int requested) {
    if (requested > 0) return std::min(requested, 64);
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

int bfs_depth_cap(const TwoTerminalGraph& g, int d) {
    return std::min(d, g.n() - 1);
}

// Truncated BFS on the subgraph selected by `mask`, shared by the subset
// scanner and the public pathset test.
struct SubsetOracle {
    int n, s, t, depth;
    std::uint32_t tbit;
    std::array<std::uint8_t, 64> eu{};
    std::array<std::uint8_t, 64> ev{};
    int st_edge = -1;

    SubsetOracle(const TwoTerminalGraph& g, int d)
        : n(g.n()), s(g.s()), t(g.t()), depth(bfs_depth_cap(g, d)),
          tbit(std::uint32_t{1} << g.t()) {
        for (int i = 0; i < g.m(); ++i) {
            eu[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g.edge(i).u);
            ev[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g.edge(i).v);
        }
        st_edge = g.edge_index(g.s(), g.t());
    }

    bool pathset(std::uint64_t mask) const {
        if (st_edge >= 0 && (mask >> st_edge) & 1) return true;
        std::array<std::uint32_t, 32> rows{};
        std::uint64_t mm = mask;
        while (mm) {
            int e = std::countr_zero(mm);
            mm &= mm - 1;
            rows[eu[static_cast<std::size_t>(e)]] |= std::uint32_t{1} << ev[static_cast<std::size_t>(e)];
            rows[ev[static_cast<std::size_t>(e)]] |= std::uint32_t{1} << eu[static_cast<std::size_t>(e)];
        }
        std::uint32_t reached = std::uint32_t{1} << s;
        std::uint32_t frontier = reached;
        for (int step = 0; step < depth && frontier; ++step) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= rows[static_cast<std::size_t>(v)];
            }
            if (next & tbit) return true;
            frontier = next & ~reached;
            reached |= next;
        }
        return false;
    }
};

using CardCounts = std::array<std::uint64_t, 65>;

void scan_subset_range(const SubsetOracle& oracle, std::uint64_t lo, std::uint64_t hi,
                       CardCounts& acc) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (oracle.pathset(mask))
            ++acc[static_cast<std::size_t>(std::popcount(mask))];
    }
}

CensusVector census_subset_enum(const TwoTerminalGraph& g, int d, const CensusOptions& opts) {
    const int m = g.m();
    if (m > opts.subset_cap_m)
        throw CapacityError("subset enumeration capped at m <= " +
                            std::to_string(opts.subset_cap_m));
    SubsetOracle oracle(g, d);
    const std::uint64_t total = std::uint64_t{1} << m;

    int workers = effective_workers(opts.workers);
    // Partition by the top bits so results reduce in a fixed order.
    int part_bits = 0;
    while ((1 << part_bits) < workers) ++part_bits;
    if (m < part_bits + 4) part_bits = 0;
    const int parts = 1 << part_bits;
    std::vector<CardCounts> partial(static_cast<std::size_t>(parts));
    for (auto& p : partial) p.fill(0);

    if (parts == 1) {
        scan_subset_range(oracle, 0, total, partial[0]);
    } else {
        const std::uint64_t chunk = total >> part_bits;
        std::vector<std::thread> pool;
        std::atomic<int> next_part{0};
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    int p = next_part.fetch_add(1);
                    if (p >= parts) return;
                    scan_subset_range(oracle, chunk * static_cast<std::uint64_t>(p),
                                      chunk * static_cast<std::uint64_t>(p + 1),
                                      partial[static_cast<std::size_t>(p)]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    CensusVector out;
    out.d = d;
    out.m = m;
    out.counts.assign(static_cast<std::size_t>(m), mpz_class(0));
    for (int p = 0; p < parts; ++p)
        for (int i = 1; i <= m; ++i)
            out.counts[static_cast<std::size_t>(i - 1)] +=
                mpz_class(static_cast<unsigned long>(partial[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]));
    return out;
}

// Depth-first enumeration of simple terminal paths of length <= d, pruned by
// the distance-to-t map of the full graph.
std::vector<std::uint64_t> enumerate_paths(const TwoTerminalGraph& g, int d, std::size_t cap) {
    const int n = g.n();
    auto rows = g.adjacency_rows();

    std::vector<int> dist_t(static_cast<std::size_t>(n), n + 1);
    {
        std::uint32_t reached = std::uint32_t{1} << g.t();
        std::uint32_t frontier = reached;
        dist_t[static_cast<std::size_t>(g.t())] = 0;
        int depth = 0;
        while (frontier) {
            ++depth;
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= rows[static_cast<std::size_t>(v)];
            }
            frontier = next & ~reached;
            std::uint32_t nf = frontier;
            while (nf) {
                int v = std::countr_zero(nf);
                nf &= nf - 1;
                dist_t[static_cast<std::size_t>(v)] = depth;
            }
            reached |= next;
        }
    }

    std::vector<std::uint64_t> masks;
    const int dcap = std::min(d, n - 1);
    std::uint32_t visited = std::uint32_t{1} << g.s();
    std::uint64_t mask = 0;

    std::function<void(int, int)> dfs = [&](int v, int used) {
        if (used >= dcap) return;
        std::uint32_t cand = rows[static_cast<std::size_t>(v)] & ~visited;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            int e = g.edge_index(v, w);
            if (w == g.t()) {
                masks.push_back(mask | (std::uint64_t{1} << e));
                if (masks.size() > cap)
                    throw BackendInfeasibleError("terminal path enumeration exceeded cap");
                continue;
            }
            if (used + 1 + dist_t[static_cast<std::size_t>(w)] > dcap) continue;
            visited |= std::uint32_t{1} << w;
            mask |= std::uint64_t{1} << e;
            dfs(w, used + 1);
            visited &= ~(std::uint32_t{1} << w);
            mask &= ~(std::uint64_t{1} << e);
        }
    };
    dfs(g.s(), 0);

    std::sort(masks.begin(), masks.end());
    return masks;
}

std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
    // Distinct simple paths between the same endpoints are never
    // mask-comparable, so this is a no-op in practice; kept as a guard.
    std::vector<std::uint64_t> keep;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size() && !dominated; ++j) {
            if (i != j && (masks[i] & masks[j]) == masks[j] && masks[i] != masks[j])
                dominated = true;
        }
        if (!dominated) keep.push_back(masks[i]);
    }
    return keep;
}

struct IeAccumulator {
    std::vector<long long> weight;  // weight[u] = signed count of unions of size u
    std::uint64_t nodes = 0;
    std::uint64_t guard = 0;
};

// Union counting over path masks. Subtrees whose next mask is already inside
// the union cancel in include/exclude pairs and are skipped whole.
void ie_recurse(const std::vector<std::uint64_t>& masks, std::size_t j,
                std::uint64_t unioned, int sign, IeAccumulator& acc) {
    if (++acc.nodes > acc.guard)
        throw BackendInfeasibleError("inclusion-exclusion node guard exceeded");
    if (j == masks.size()) {
        if (unioned) acc.weight[static_cast<std::size_t>(std::popcount(unioned))] += sign;
        return;
    }
    if ((masks[j] & unioned) == masks[j]) return;
    ie_recurse(masks, j + 1, unioned, sign, acc);
    ie_recurse(masks, j + 1, unioned | masks[j], -sign, acc);
}

CensusVector census_path_ie(const TwoTerminalGraph& g, int d, const CensusOptions& opts) {
    const int m = g.m();
    auto masks = minimal_masks(enumerate_paths(g, d, opts.path_mask_cap));
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    CensusVector out;
    out.d = d;
    out.m = m;
    out.counts.assign(static_cast<std::size_t>(m), mpz_class(0));
    if (masks.empty()) return out;

    IeAccumulator acc;
    acc.weight.assign(static_cast<std::size_t>(m + 1), 0);
    acc.guard = opts.ie_node_guard;
    ie_recurse(masks, 0, 0, -1, acc);

    for (int i = 1; i <= m; ++i) {
        mpz_class total = 0;
        for (int u = 1; u <= i; ++u) {
            long long w = acc.weight[static_cast<std::size_t>(u)];
            if (w == 0) continue;
            total += mpz_class(static_cast<long>(w)) *
                     binomial(static_cast<unsigned long>(m - u), static_cast<unsigned long>(i - u));
        }
        out.counts[static_cast<std::size_t>(i - 1)] = total;
    }
    return out;
}

}  // namespace

bool is_d_pathset(const TwoTerminalGraph& g, EdgeSubset sub, int d) {
    if (d < 1) throw ParameterError("distance bound must be positive");
    if (sub.mask & ~g.full_mask()) throw ParameterError("subset mask references invalid edges");
    SubsetOracle oracle(g, d);
    return oracle.pathset(sub.mask);
}

CensusVector census(const TwoTerminalGraph& g, int d, CensusBackend backend,
                    const CensusOptions& opts) {
    if (d < 1) throw ParameterError("distance bound must be positive");
    switch (backend) {
        case CensusBackend::subset_enum:
            return census_subset_enum(g, d, opts);
        case CensusBackend::path_ie:
            return census_path_ie(g, d, opts);
        case CensusBackend::auto_select:
            if (g.m() <= opts.subset_cap_m) return census_subset_enum(g, d, opts);
            return census_path_ie(g, d, opts);
    }
    throw InternalInvariantError("unknown census backend");
}

mpq_class evaluate_reliability(const CensusVector& c, const mpq_class& rho) {
    if (rho < 0 || rho > 1) throw ParameterError("rho must lie in [0,1]");
    const int m = c.m;
    std::vector<mpq_class> up(static_cast<std::size_t>(m + 1)),
        down(static_cast<std::size_t>(m + 1));
    up[0] = 1;
    down[0] = 1;
    const mpq_class q = 1 - rho;
    for (int i = 1; i <= m; ++i) {
        up[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i - 1)] * q;
        down[static_cast<std::size_t>(i)] = down[static_cast<std::size_t>(i - 1)] * rho;
    }
    mpq_class r = 0;
    for (int i = 1; i <= m; ++i)
        r += mpq_class(c.counts[static_cast<std::size_t>(i - 1)]) *
             up[static_cast<std::size_t>(i)] * down[static_cast<std::size_t>(m - i)];
    r.canonicalize();
    return r;
}

mpq_class evaluate_unreliability(const CensusVector& c, const mpq_class& rho) {
    mpq_class u = 1 - evaluate_reliability(c, rho);
    u.canonicalize();
    return u;
}

std::vector<std::uint64_t> terminal_path_masks(const TwoTerminalGraph& g, int d,
                                               std::size_t cap) {
    if (d < 1) throw ParameterError("distance bound must be positive");
    return enumerate_paths(g, d, cap);
}

std::vector<int> irrelevant_edges(const TwoTerminalGraph& g, int d,
                                  const CensusOptions& opts) {
    if (d < 1) throw ParameterError("distance bound must be positive");
    std::uint64_t relevant = 0;
    for (std::uint64_t mask : enumerate_paths(g, d, opts.path_mask_cap)) relevant |= mask;
    std::vector<int> out;
    for (int e = 0; e < g.m(); ++e)
        if (!((relevant >> e) & 1)) out.push_back(e);
    return out;
}

CutsetStats cutset_stats_from_census(const CensusVector& c) {
    CutsetStats s;
    s.d = c.d;
    s.m = c.m;
    s.B.assign(static_cast<std::size_t>(c.m), mpz_class(0));
    for (int i = 1; i <= c.m; ++i) {
        mpz_class pathsets_left =
            (c.m - i >= 1) ? c.counts[static_cast<std::size_t>(c.m - i - 1)] : mpz_class(0);
        s.B[static_cast<std::size_t>(i - 1)] =
            binomial(static_cast<unsigned long>(c.m), static_cast<unsigned long>(i)) -
            pathsets_left;
    }
    if (c.m == 0 || c.counts[static_cast<std::size_t>(c.m - 1)] == 0) {
        s.lambda_st = 0;  // the graph itself is not a pathset at this bound
        return s;
    }
    for (int i = 1; i <= c.m; ++i) {
        if (s.B[static_cast<std::size_t>(i - 1)] > 0) {
            s.lambda_st = i;
            break;
        }
    }
    return s;
}

namespace {

bool subset_is_cutset(const SubsetOracle& oracle, std::uint64_t full, std::uint64_t removed) {
    return !oracle.pathset(full & ~removed);
}

}  // namespace

CutsetStats cutset_stats(const TwoTerminalGraph& g, int d, const CensusOptions& opts) {
    CensusVector c = census(g, d, CensusBackend::auto_select, opts);
    CutsetStats s = cutset_stats_from_census(c);
    if (s.lambda_st == 0) return s;

    // Scan all lambda-sized removals: trivial means the removal contains
    // every edge at s or every edge at t.
    mpz_class work = binomial(static_cast<unsigned long>(g.m()),
                              static_cast<unsigned long>(s.lambda_st));
    if (work > mpz_class(1) << 22)
        throw CapacityError("minimum-cutset scan too large");

    std::uint64_t s_mask = 0, t_mask = 0;
    for (int e = 0; e < g.m(); ++e) {
        if (g.edge(e).u == g.s() || g.edge(e).v == g.s()) s_mask |= std::uint64_t{1} << e;
        if (g.edge(e).u == g.t() || g.edge(e).v == g.t()) t_mask |= std::uint64_t{1} << e;
    }
    SubsetOracle oracle(g, d);
    const std::uint64_t full = g.full_mask();

    bool all_trivial = true;
    std::vector<int> pick(static_cast<std::size_t>(s.lambda_st));
    for (int i = 0; i < s.lambda_st; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int k = s.lambda_st, m = g.m();
    for (;;) {
        std::uint64_t removed = 0;
        for (int i = 0; i < k; ++i) removed |= std::uint64_t{1} << pick[static_cast<std::size_t>(i)];
        if (subset_is_cutset(oracle, full, removed)) {
            bool trivial = ((removed & s_mask) == s_mask) || ((removed & t_mask) == t_mask);
            if (!trivial) {
                all_trivial = false;
                break;
            }
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    s.min_cutsets_all_trivial = all_trivial;
    return s;
}

}  // namespace ttr
