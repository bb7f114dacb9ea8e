#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pkahler {

/// Strictly increasing tuple of integers in 1..n, the label of a basis
/// monomial phi_{i_1} /\ ... /\ phi_{i_p}. The empty tuple labels the
/// degree-zero basis element.
using MultiIndex = std::vector<int>;

namespace mi {

inline bool strictly_increasing(const MultiIndex& I) {
    for (size_t a = 1; a < I.size(); ++a)
        if (I[a - 1] >= I[a]) return false;
    return true;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    if (k > n - k) k = n - k;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Rank of I among all p-subsets of {1..n} in lexicographic order.
inline long long lex_rank(const MultiIndex& I, int n) {
    long long r = 0;
    int prev = 0;
    int p = static_cast<int>(I.size());
    for (int a = 0; a < p; ++a) {
        for (int v = prev + 1; v < I[a]; ++v) r += binomial(n - v, p - a - 1);
        prev = I[a];
    }
    return r;
}

inline MultiIndex lex_unrank(long long rank, int n, int p) {
    MultiIndex I;
    I.reserve(p);
    int v = 1;
    for (int a = 0; a < p; ++a) {
        while (true) {
            long long block = binomial(n - v, p - a - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        I.push_back(v);
        ++v;
    }
    return I;
}

inline std::vector<MultiIndex> all_subsets(int n, int p) {
    std::vector<MultiIndex> out;
    if (p < 0 || p > n) return out;
    long long count = binomial(n, p);
    out.reserve(count);
    for (long long r = 0; r < count; ++r) out.push_back(lex_unrank(r, n, p));
    return out;
}

/// Merge two disjoint sorted index tuples, returning the sorted union and
/// the sign of the shuffle permutation. Returns sign 0 when they overlap.
inline int merge_sign(const MultiIndex& I, const MultiIndex& J, MultiIndex& out) {
    out.clear();
    out.reserve(I.size() + J.size());
    size_t a = 0, b = 0;
    int sign = 1;
    while (a < I.size() && b < J.size()) {
        if (I[a] == J[b]) return 0;
        if (I[a] < J[b]) {
            out.push_back(I[a++]);
        } else {
            // J[b] jumps over the remaining entries of I
            if ((I.size() - a) % 2 == 1) sign = -sign;
            out.push_back(J[b++]);
        }
    }
    while (a < I.size()) out.push_back(I[a++]);
    while (b < J.size()) out.push_back(J[b++]);
    return sign;
}

inline MultiIndex complement(const MultiIndex& I, int n) {
    MultiIndex out;
    out.reserve(n - I.size());
    size_t a = 0;
    for (int v = 1; v <= n; ++v) {
        if (a < I.size() && I[a] == v) {
            ++a;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

inline MultiIndex full(int n) {
    MultiIndex I(n);
    for (int v = 1; v <= n; ++v) I[v - 1] = v;
    return I;
}

}  // namespace mi
}  // namespace pkahler
