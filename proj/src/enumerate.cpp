#include "ttr/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace ttr {

namespace {

std::vector<std::uint64_t> augment_level(const std::vector<std::uint64_t>& level, int n) {
    const int slots = n * (n - 1) / 2;
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t code : level) {
        for (int slot = 0; slot < slots; ++slot) {
            if ((code >> slot) & 1) continue;
            next.insert(canonical_word(code | (std::uint64_t{1} << slot), n));
        }
    }
    std::vector<std::uint64_t> out(next.begin(), next.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void ClassCatalog::require(int n, int m) {
    if (n < 2) throw ParameterError("class enumeration requires n >= 2");
    if (n > n_cap_) throw CapacityError("class enumeration capped at n <= " +
                                        std::to_string(n_cap_));
    const int slots = n * (n - 1) / 2;
    if (m < 0 || m > slots) throw ParameterError("m outside [0, C(n,2)]");
    auto& levels = levels_[n];
    if (levels.empty()) levels.push_back({0});  // the edgeless class
    while (static_cast<int>(levels.size()) <= m)
        levels.push_back(augment_level(levels.back(), n));
}

const std::vector<std::uint64_t>& ClassCatalog::codes(int n, int m) {
    require(n, m);
    return levels_[n][static_cast<std::size_t>(m)];
}

std::vector<TwoTerminalGraph> ClassCatalog::enumerate_class(int n, int m) {
    std::vector<TwoTerminalGraph> out;
    for (std::uint64_t code : codes(n, m)) out.push_back(graph_from_word(code, n));
    return out;
}

mpz_class ClassCatalog::class_size(int n, int m) {
    return mpz_class(static_cast<unsigned long>(codes(n, m).size()));
}

std::vector<TwoTerminalGraph> enumerate_class(int n, int m, int n_cap) {
    ClassCatalog catalog(n_cap);
    return catalog.enumerate_class(n, m);
}

mpz_class class_size(int n, int m, int n_cap) {
    ClassCatalog catalog(n_cap);
    return catalog.class_size(n, m);
}

}  // namespace ttr
