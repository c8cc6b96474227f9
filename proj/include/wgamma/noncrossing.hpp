#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wgamma/rational.hpp"

namespace wgamma::nc {

inline constexpr int kPMax = 12;

/// Partition of {1..p} into noncrossing blocks. Canonical form: each block
/// sorted ascending, blocks ordered by their minimum element.
struct NoncrossingPartition {
    int p = 0;
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool operator==(const NoncrossingPartition&) const = default;
};

/// Permutation of {1..p}; image_of(i) is the image of i.
struct Permutation {
    std::vector<int> images;  // images[i-1] = image of i

    int size() const { return static_cast<int>(images.size()); }
    int image_of(int i) const { return images[i - 1]; }
};

/// Perfect matching of {1..p2}.
struct PairPartition {
    int p2 = 0;
    std::vector<std::pair<int, int>> pairs;
};

inline BigInt catalan(int p) {
    BigInt c = 1;
    for (int i = 1; i <= p; ++i) c = c * 2 * (2 * i - 1) / (i + 1);
    return c;
}

inline bool is_noncrossing(const NoncrossingPartition& pi) {
    // stack scan: a crossing exists iff some element closes a block that is
    // not the innermost open one
    std::vector<int> block_of(pi.p + 1, -1);
    std::vector<int> remaining(pi.blocks.size());
    for (int b = 0; b < static_cast<int>(pi.blocks.size()); ++b) {
        remaining[b] = static_cast<int>(pi.blocks[b].size());
        for (int x : pi.blocks[b]) {
            if (x < 1 || x > pi.p || block_of[x] != -1) return false;
            block_of[x] = b;
        }
    }
    for (int x = 1; x <= pi.p; ++x)
        if (block_of[x] == -1) return false;

    std::vector<int> stack;
    for (int x = 1; x <= pi.p; ++x) {
        int b = block_of[x];
        if (stack.empty() || stack.back() != b) stack.push_back(b);
        if (--remaining[b] == 0) {
            if (stack.back() != b) return false;
            stack.pop_back();
        }
    }
    return true;
}

namespace detail {

// Partitions of {1..L} for all L <= p, built by recursing on the block
// containing 1: its legs split the rest into independent gaps.
inline std::vector<std::vector<NoncrossingPartition>> build_tables(int p) {
    std::vector<std::vector<NoncrossingPartition>> tables(p + 1);
    tables[0].push_back(NoncrossingPartition{0, {}});
    for (int L = 1; L <= p; ++L) {
        std::vector<int> legs;
        std::vector<NoncrossingPartition>& out = tables[L];

        auto assemble = [&](const std::vector<int>& gap_sizes) {
            // offsets of each gap within {1..L}
            std::vector<int> offsets(gap_sizes.size());
            int pos = 1;  // first leg
            for (std::size_t g = 0; g < gap_sizes.size(); ++g) {
                offsets[g] = pos;  // gap g covers (pos, pos + gap_sizes[g]]
                pos += gap_sizes[g] + 1;
            }
            std::vector<const NoncrossingPartition*> choice(gap_sizes.size());
            auto rec = [&](auto&& self, std::size_t g) -> void {
                if (g == gap_sizes.size()) {
                    NoncrossingPartition np;
                    np.p = L;
                    np.blocks.push_back(legs);
                    for (std::size_t k = 0; k < choice.size(); ++k)
                        for (const auto& blk : choice[k]->blocks) {
                            std::vector<int> shifted(blk.size());
                            for (std::size_t j = 0; j < blk.size(); ++j)
                                shifted[j] = blk[j] + offsets[k];
                            np.blocks.push_back(std::move(shifted));
                        }
                    std::sort(np.blocks.begin(), np.blocks.end(),
                              [](const auto& a, const auto& b) { return a.front() < b.front(); });
                    out.push_back(std::move(np));
                    return;
                }
                for (const auto& sub : tables[gap_sizes[g]]) {
                    choice[g] = &sub;
                    self(self, g + 1);
                }
            };
            rec(rec, 0);
        };

        // choose gap sizes g_1..g_k (between successive legs) and the tail
        // gap after the last leg; L = k + sum(g_i) + tail
        std::vector<int> gap_sizes;
        auto choose = [&](auto&& self, int used) -> void {
            // close the first block here: remaining positions form the tail gap
            gap_sizes.push_back(L - used);
            assemble(gap_sizes);
            gap_sizes.pop_back();
            // or insert another leg after a gap of size g
            for (int g = 0; used + g + 1 <= L; ++g) {
                gap_sizes.push_back(g);
                legs.push_back(legs.back() + g + 1);
                self(self, used + g + 1);
                legs.pop_back();
                gap_sizes.pop_back();
            }
        };
        legs.assign(1, 1);
        choose(choose, 1);
    }
    return tables;
}

}  // namespace detail

/// Every noncrossing partition of {1..p}, canonical form, deterministic order.
inline std::vector<NoncrossingPartition> enumerate_nc(int p, int p_max = kPMax) {
    if (p < 1 || p > p_max) throw std::domain_error("enumerate_nc: p out of range");
    return std::move(detail::build_tables(p)[p]);
}

/// Number of blocks of even cardinality.
inline int even_blocks(const NoncrossingPartition& pi) {
    int e = 0;
    for (const auto& b : pi.blocks) e += (b.size() % 2 == 0);
    return e;
}

/// Doubling bijection NC(p) -> NC2(2p): block {i1<...<ik} contributes the
/// pairs {2i1-1, 2ik} and {2ij, 2i(j+1)-1}.
inline PairPartition fat(const NoncrossingPartition& pi) {
    PairPartition out;
    out.p2 = 2 * pi.p;
    for (const auto& b : pi.blocks) {
        int k = static_cast<int>(b.size());
        out.pairs.emplace_back(2 * b[0] - 1, 2 * b[k - 1]);
        for (int j = 0; j + 1 < k; ++j) out.pairs.emplace_back(2 * b[j], 2 * b[j + 1] - 1);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

/// Inverse of fat: merge 2i-1, 2i into i and read off connected components.
inline NoncrossingPartition collapse(const PairPartition& rho) {
    int p = rho.p2 / 2;
    std::vector<int> parent(p + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : rho.pairs) parent[find((a + 1) / 2)] = find((b + 1) / 2);

    std::vector<std::vector<int>> buckets(p + 1);
    for (int i = 1; i <= p; ++i) buckets[find(i)].push_back(i);
    NoncrossingPartition out;
    out.p = p;
    for (auto& b : buckets)
        if (!b.empty()) out.blocks.push_back(std::move(b));
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

/// Fattened identity: {1,2}{3,4}...{2p-1,2p}.
inline PairPartition rho12(int p) {
    PairPartition out;
    out.p2 = 2 * p;
    for (int i = 1; i <= p; ++i) out.pairs.emplace_back(2 * i - 1, 2 * i);
    return out;
}

/// Fattened inverse full cycle: pairs i with i + (-1)^{i+1} * 3 modulo 2p.
inline PairPartition rho14(int p) {
    PairPartition out;
    out.p2 = 2 * p;
    for (int i = 1; i <= 2 * p; i += 2) {
        int j = (i + 3 - 1) % (2 * p) + 1;
        out.pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

/// Number of connected components of the union of two matchings.
inline int join_block_count(const PairPartition& rho, const PairPartition& sigma) {
    if (rho.p2 != sigma.p2) throw std::domain_error("join_block_count: ground-set mismatch");
    std::vector<int> parent(rho.p2 + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : rho.pairs) parent[find(a)] = find(b);
    for (auto [a, b] : sigma.pairs) parent[find(a)] = find(b);
    int count = 0;
    for (int i = 1; i <= rho.p2; ++i) count += (find(i) == i);
    return count;
}

/// Geodesic permutation of a noncrossing partition: each block becomes the
/// cycle mapping an element to its predecessor within the block (cyclically),
/// so the one-block partition maps to the full cycle i -> i-1.
inline Permutation geodesic_permutation(const NoncrossingPartition& pi) {
    Permutation sigma;
    sigma.images.assign(pi.p, 0);
    for (const auto& b : pi.blocks) {
        int k = static_cast<int>(b.size());
        for (int j = 0; j < k; ++j) sigma.images[b[j] - 1] = b[(j + k - 1) % k];
    }
    return sigma;
}

/// The full cycle gamma(i) = i - 1 (cyclically), i.e. (1 2 ... p)^{-1}.
inline Permutation full_cycle_gamma(int p) {
    Permutation g;
    g.images.assign(p, 0);
    for (int i = 1; i <= p; ++i) g.images[i - 1] = (i + p - 2) % p + 1;
    return g;
}

/// (a . b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation c;
    c.images.assign(b.size(), 0);
    for (int i = 1; i <= b.size(); ++i) c.images[i - 1] = a.image_of(b.image_of(i));
    return c;
}

inline int cycle_count(const Permutation& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    int count = 0;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = sigma.image_of(j)) seen[j] = true;
    }
    return count;
}

/// Minimal number of transpositions: |sigma| = p - #sigma.
inline int transposition_length(const Permutation& sigma) {
    return sigma.size() - cycle_count(sigma);
}

inline Permutation inverse(const Permutation& sigma) {
    Permutation inv;
    inv.images.assign(sigma.size(), 0);
    for (int i = 1; i <= sigma.size(); ++i) inv.images[sigma.image_of(i) - 1] = i;
    return inv;
}

/// #(pi gamma), which Lemma-style counting says equals 1 + e(pi).
inline int cycle_count_pi_gamma(const NoncrossingPartition& pi) {
    return cycle_count(compose(geodesic_permutation(pi), full_cycle_gamma(pi.p)));
}

}  // namespace wgamma::nc
