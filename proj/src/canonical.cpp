#include "ttr/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>

#include "ttr/rational.hpp"

namespace ttr {

namespace {

constexpr int kCodeMaxVertices = 11;  // C(11,2) = 55 bits fits the code word

// All vertex permutations fixing {0,1} as a set, precompiled to maps on
// pair slots: tables[p][slot] is the slot of the permuted pair.
struct PermTable {
    int n = 0;
    int slots = 0;
    std::vector<std::vector<std::uint8_t>> maps;
};

const PermTable& perm_table(int n) {
    static std::mutex mu;
    static std::map<int, PermTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    PermTable t;
    t.n = n;
    t.slots = n * (n - 1) / 2;
    std::vector<int> rest(static_cast<std::size_t>(std::max(0, n - 2)));
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<int> perm(static_cast<std::size_t>(n));
    do {
        for (int swap01 = 0; swap01 < 2; ++swap01) {
            perm[0] = swap01 ? 1 : 0;
            perm[1] = swap01 ? 0 : 1;
            for (std::size_t i = 0; i < rest.size(); ++i) perm[i + 2] = rest[i];
            std::vector<std::uint8_t> map(static_cast<std::size_t>(t.slots));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    map[static_cast<std::size_t>(pair_index(u, v, n))] =
                        static_cast<std::uint8_t>(pair_index(perm[static_cast<std::size_t>(u)],
                                                             perm[static_cast<std::size_t>(v)], n));
            t.maps.push_back(std::move(map));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

int pair_index(int u, int v, int n) {
    // Row-major upper triangle: (0,1),(0,2),...,(0,n-1),(1,2),...
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::uint64_t adjacency_word(const TwoTerminalGraph& g) {
    if (g.n() > kCodeMaxVertices) throw CapacityError("adjacency word needs n <= 11");
    std::uint64_t w = 0;
    for (const Edge& e : g.edges()) w |= std::uint64_t{1} << pair_index(e.u, e.v, g.n());
    return w;
}

TwoTerminalGraph graph_from_word(std::uint64_t word, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((word >> pair_index(u, v, n)) & 1) edges.emplace_back(u, v);
    return TwoTerminalGraph(n, std::move(edges));
}

std::uint64_t canonical_word(std::uint64_t word, int n) {
    const PermTable& t = perm_table(n);
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& map : t.maps) {
        std::uint64_t img = 0;
        std::uint64_t w = word;
        while (w) {
            int slot = std::countr_zero(w);
            w &= w - 1;
            img |= std::uint64_t{1} << map[static_cast<std::size_t>(slot)];
        }
        best = std::min(best, img);
    }
    return best;
}

CanonicalCode canonical_code(const TwoTerminalGraph& g, int n_cap) {
    if (g.n() > std::min(n_cap, kCodeMaxVertices))
        throw CapacityError("canonical code permutation search capped at n <= " +
                            std::to_string(std::min(n_cap, kCodeMaxVertices)));
    if (g.s() != 0 || g.t() != 1)
        throw PreconditionError("canonical codes assume terminals stored at 0, 1");
    return CanonicalCode{g.n(), canonical_word(adjacency_word(g), g.n())};
}

TwoTerminalGraph canonical_graph(const TwoTerminalGraph& g, int n_cap) {
    CanonicalCode c = canonical_code(g, n_cap);
    return graph_from_word(c.code, c.n);
}

std::string CanonicalCode::hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(code));
    return buf;
}

mpz_class burnside_total_classes(int n) {
    if (n > 8) throw CapacityError("Burnside cross-check limited to n <= 8");
    const PermTable& t = perm_table(n);
    mpz_class total = 0;
    for (const auto& map : t.maps) {
        // count cycles of the slot permutation
        std::vector<bool> seen(map.size(), false);
        int cycles = 0;
        for (std::size_t i = 0; i < map.size(); ++i) {
            if (seen[i]) continue;
            ++cycles;
            std::size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = map[j];
            }
        }
        total += mpz_class(1) << cycles;
    }
    return total / static_cast<unsigned long>(t.maps.size());
}

}  // namespace ttr
