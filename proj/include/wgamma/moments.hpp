#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wgamma/noncrossing.hpp"
#include "wgamma/rational.hpp"

namespace wgamma::nc {

/// Count of noncrossing partitions by (block count, even-block count).
struct ProfileTable {
    int p = 0;
    std::map<std::pair<int, int>, BigInt> counts;  // (b, e) -> N(p, b, e)

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [key, c] : counts) t += c;
        return t;
    }
};

/// N(p, b, e) via the first-block recurrence: the block containing 1 has
/// r >= 0 further legs cutting the rest into r+1 independent gaps; r odd
/// adds one even block.
inline ProfileTable profile_counts(int p, int p_max = kPMax) {
    if (p < 1 || p > p_max) throw std::domain_error("profile_counts: p out of range");
    using Key = std::pair<int, int>;
    using Table = std::map<Key, BigInt>;
    std::vector<Table> rows(p + 1);
    rows[0][{0, 0}] = 1;

    for (int q = 1; q <= p; ++q) {
        // conv = distribution of (total size, b, e) over tuples of gaps;
        // extended one gap at a time. conv_k[s] uses rows[0..q-1] only.
        std::vector<Table> conv(q);  // conv[s]: one gap of total size s
        for (int s = 0; s < q; ++s) conv[s] = rows[s];
        Table& target = rows[q];
        for (int r = 0; r + 1 <= q; ++r) {
            int points = q - r - 1;  // spread over r+1 gaps
            int e_shift = (r % 2 == 1) ? 1 : 0;
            for (const auto& [key, c] : conv[points]) target[{key.first + 1, key.second + e_shift}] += c;
            // extend every tuple by one more gap
            if (r + 2 <= q) {
                std::vector<Table> next(q);
                for (int s = 0; s < q; ++s)
                    for (const auto& [k1, c1] : conv[s])
                        for (int g = 0; s + g < q; ++g)
                            for (const auto& [k2, c2] : rows[g])
                                next[s + g][{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
                conv = std::move(next);
            }
        }
    }

    ProfileTable out;
    out.p = p;
    out.counts = std::move(rows[p]);
    return out;
}

/// Limiting p-th moment by direct enumeration: sum of m^{#pi} n^{e(pi)}.
template <typename Scalar>
Scalar moment_enum(int p, const Scalar& m, const Scalar& n, int p_max = kPMax) {
    std::vector<Scalar> mpow(p + 1), npow(p / 2 + 1);
    mpow[0] = Scalar(1);
    for (int i = 1; i <= p; ++i) mpow[i] = mpow[i - 1] * m;
    npow[0] = Scalar(1);
    for (int i = 1; i <= p / 2; ++i) npow[i] = npow[i - 1] * n;

    Scalar total(0);
    for (const auto& pi : enumerate_nc(p, p_max)) total += mpow[pi.block_count()] * npow[even_blocks(pi)];
    return total;
}

/// Same moment from the (b, e) profile counts.
template <typename Scalar>
Scalar moment_from_profiles(const ProfileTable& table, const Scalar& m, const Scalar& n) {
    Scalar total(0);
    for (const auto& [key, c] : table.counts) {
        Scalar term(static_cast<BigInt>(c));
        for (int i = 0; i < key.first; ++i) term *= m;
        for (int i = 0; i < key.second; ++i) term *= n;
        total += term;
    }
    return total;
}

/// Free cumulants: coefficients of m(1+nz)/(1-z^2) = sum kappa_{k+1} z^k,
/// i.e. kappa_p = m for odd p and m n for even p.
template <typename Scalar>
std::vector<Scalar> free_cumulants(int p_max, const Scalar& m, const Scalar& n) {
    if (p_max < 1) throw std::domain_error("free_cumulants: p_max < 1");
    // m(1+nz)(1 + z^2 + z^4 + ...): odd powers of z pick up the n factor
    std::vector<Scalar> kappa(p_max);
    for (int k = 0; k < p_max; ++k) kappa[k] = (k % 2 == 0) ? m : m * n;
    return kappa;
}

/// Moments from free cumulants by the standard recursion
///   M_p = sum_{s=1}^{p} kappa_s sum_{i_1+...+i_s = p-s} M_{i_1} ... M_{i_s}.
template <typename Scalar>
std::vector<Scalar> moments_from_cumulants(const std::vector<Scalar>& kappa) {
    int p_max = static_cast<int>(kappa.size());
    std::vector<Scalar> mom(p_max + 1);
    mom[0] = Scalar(1);
    for (int p = 1; p <= p_max; ++p) {
        // conv[s][q] = sum over i_1+...+i_s = q of prod M_{i_j}, built lazily
        std::vector<std::vector<Scalar>> conv(p + 1, std::vector<Scalar>(p, Scalar(0)));
        for (int q = 0; q < p; ++q) conv[1][q] = mom[q];
        for (int s = 2; s <= p; ++s)
            for (int q = 0; q < p; ++q)
                for (int j = 0; j <= q; ++j) conv[s][q] += conv[s - 1][q - j] * mom[j];
        Scalar total(0);
        for (int s = 1; s <= p; ++s) total += kappa[s - 1] * conv[s][p - s];
        mom[p] = total;
    }
    return std::vector<Scalar>(mom.begin() + 1, mom.end());
}

namespace detail {

template <typename Scalar>
std::vector<Scalar> series_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int order) {
    std::vector<Scalar> c(order + 1, Scalar(0));
    for (int i = 0; i <= order; ++i) {
        if (a[i] == Scalar(0)) continue;
        for (int j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

template <typename Scalar>
std::vector<Scalar> series_inverse(const std::vector<Scalar>& a, int order) {
    std::vector<Scalar> b(order + 1, Scalar(0));
    b[0] = Scalar(1) / a[0];
    for (int k = 1; k <= order; ++k) {
        Scalar acc(0);
        for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -acc * b[0];
    }
    return b;
}

}  // namespace detail

/// Power-series solution F(z) = sum M_p z^p of
///   (F - 1)(1 - z^2 F^2) = m z F (1 + n z F),
/// by the fixed point F <- 1 + m z F (1 + n z F) / (1 - z^2 F^2).
/// Coefficient k is stable after k sweeps; we run order+1.
template <typename Scalar>
std::vector<Scalar> mgf_series(const Scalar& m, const Scalar& n, int order) {
    if (order < 0 || order > 64) throw std::domain_error("mgf_series: order out of range");
    using detail::series_inverse;
    using detail::series_mul;
    std::vector<Scalar> f(order + 1, Scalar(0));
    f[0] = Scalar(1);
    for (int sweep = 0; sweep <= order; ++sweep) {
        std::vector<Scalar> zf(order + 1, Scalar(0));  // z F
        for (int k = 1; k <= order; ++k) zf[k] = f[k - 1];
        std::vector<Scalar> one_plus_nzf = zf;
        for (auto& c : one_plus_nzf) c *= n;
        one_plus_nzf[0] += Scalar(1);
        std::vector<Scalar> num = series_mul(zf, one_plus_nzf, order);
        for (auto& c : num) c *= m;
        std::vector<Scalar> z2f2 = series_mul(zf, zf, order);
        std::vector<Scalar> denom(order + 1, Scalar(0));
        denom[0] = Scalar(1);
        for (int k = 0; k <= order; ++k) denom[k] -= z2f2[k];
        std::vector<Scalar> next = series_mul(num, series_inverse(denom, order), order);
        next[0] += Scalar(1);
        f = std::move(next);
    }
    return f;
}

}  // namespace wgamma::nc
