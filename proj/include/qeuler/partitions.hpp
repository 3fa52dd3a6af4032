#pragma once

#include "qeuler/bigint.hpp"
#include "qeuler/eulerian.hpp"
#include "qeuler/report.hpp"

#include <string>
#include <vector>

namespace qeuler {

/// Weakly decreasing parts, each slot optionally primed. Different prime
/// placements among equal parts are different objects.
struct TwoTypePartition {
    std::vector<int> parts;
    std::vector<bool> primed;

    int total() const;
    int primed_count() const;
    /// e.g. "2'1" or "1'11"; the empty partition renders as "()".
    std::string render() const;

    friend bool operator==(const TwoTypePartition&, const TwoTypePartition&) = default;
};

/// All two-type partitions of n with exactly k primes. Order: parts in
/// decreasing lexicographic order (3, 21, 111), then prime patterns read as
/// binary strings in decreasing order (1'11, 11'1, 111').
std::vector<TwoTypePartition> enumerate_ttp(int n, int k);

/// T(n, k); zero when k > n or either argument is negative.
BigInt count_T(int n, int k);

/// Rows T(n, 0..n) for 0 <= n <= max_n.
std::vector<std::vector<BigInt>> partition_table(int max_n);

/// The published triangle for 0 <= n <= 9 (55 entries).
const std::vector<std::vector<int>>& table1();

/// Whether T(n, k) is one of the entries that coincide with a W_d(t)
/// coefficient in the published triangle (k >= n - k).
bool is_w_region(int n, int k);

/// T(n,k) = sum_j C(b,j) T(n-b, k-j). Requires n, k, b >= 0 and b <= 2k - n;
/// otherwise throws std::domain_error("outside lemma domain").
/// Coordinates in the report: n -> n, d -> k, m -> b.
VerificationReport check_append_lemma(int n, int k, int b);

/// T(d+k, d) = sum_{i=1..k} (-1)^{i+1} C(k,i) T(d+k-i, d-i) + 1 for d >= 2k, k >= 1;
/// otherwise throws std::domain_error("outside theorem domain").
/// Coordinates: n -> d+k, d -> d, m -> k.
VerificationReport check_thm_T(int k, int d);

/// The same identity for W_d[t^k]. Empirical evidence only; the report has
/// conjecture severity. Coordinates: n -> d+k+1, d -> d, m -> k.
VerificationReport check_conjecture_W(int k, int d, EulerianTable& table);

/// W_d[t^k] = T(d+k, d) for k <= d. Coordinates: n -> d+k, d -> d, m -> k.
VerificationReport check_W_T_correspondence(int d, int k, EulerianTable& table);

/// Right-aligned triangle, one row per n.
std::string render_table_text(int max_n);
/// "n,k,T" with header.
std::string render_table_csv(int max_n);
/// "index value" lines, triangle read by rows starting at index 0.
std::string render_bfile(int max_n);

} // namespace qeuler
