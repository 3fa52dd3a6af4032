#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// Relabel by counting smaller entries (quadratic, no sorting).
inline std::vector<int> rank_relabel(const std::vector<int>& w)
{
    std::vector<int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int smaller = 0;
        for (int v : w)
            if (v < w[i])
                ++smaller;
        out[i] = smaller + 1;
    }
    return out;
}

inline int count_descents(const std::vector<int>& w)
{
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        c += w[i] > w[i + 1];
    return c;
}

/// Straight transcription of the recursive weight: complete with a new
/// maximum, cut at the minimum, cut the left side after its maximum until
/// exhausted, sum descents plus weights of the relabeled pieces.
inline int weight(std::vector<int> w)
{
    w = rank_relabel(w);
    const int n = static_cast<int>(w.size());
    bool identity = true;
    for (int i = 0; i < n; ++i)
        identity = identity && w[i] == i + 1;
    if (n <= 1 || identity)
        return 0;
    w.push_back(n + 1);

    std::size_t min_pos = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < w[min_pos])
            min_pos = i;

    std::vector<std::vector<int>> pieces;
    std::vector<int> left(w.begin(), w.begin() + min_pos);
    while (!left.empty()) {
        std::size_t max_pos = 0;
        for (std::size_t i = 0; i < left.size(); ++i)
            if (left[i] > left[max_pos])
                max_pos = i;
        pieces.emplace_back(left.begin(), left.begin() + max_pos + 1);
        left.erase(left.begin(), left.begin() + max_pos + 1);
    }
    pieces.push_back({w[min_pos]});
    if (min_pos + 1 < w.size())
        pieces.emplace_back(w.begin() + min_pos + 1, w.end());

    int total = 0;
    for (const auto& piece : pieces)
        total += count_descents(piece) + weight(piece);
    return total;
}

/// (d, m) -> count over S_n, or over permutations ending in 1.
inline std::map<std::pair<int, int>, std::int64_t> eulerian_counts(int n, bool ending_in_one = false)
{
    std::map<std::pair<int, int>, std::int64_t> counts;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        if (ending_in_one && (w.empty() || w.back() != 1))
            continue;
        ++counts[{count_descents(w), weight(w)}];
    } while (std::next_permutation(w.begin(), w.end()));
    return counts;
}

/// Eulerian numbers by (m+1)A(n-1,m) + (n-m)A(n-1,m-1).
inline std::vector<std::int64_t> eulerian_numbers(int n)
{
    std::vector<std::int64_t> row{1};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::int64_t> next(k, 0);
        for (int m = 0; m < k; ++m) {
            if (m < static_cast<int>(row.size()))
                next[m] += (m + 1) * row[m];
            if (m >= 1 && m - 1 < static_cast<int>(row.size()))
                next[m] += (k - m) * row[m - 1];
        }
        row = std::move(next);
    }
    return row;
}

/// Ordinary partition numbers by Euler's pentagonal recurrence.
inline std::vector<std::int64_t> partition_numbers(int max_n)
{
    std::vector<std::int64_t> p(max_n + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        std::int64_t s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p[n - g1];
            if (g2 <= n)
                s += sign * p[n - g2];
        }
        p[n] = s;
    }
    return p;
}

} // namespace oracle
