#pragma once

#include "qeuler/eulerian.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

/// en_brute(n) == en_recur(n) term for term, 0 <= n <= max_n.
VerificationReport verify_recurrence(int max_n, EulerianTable& table, BruteOptions options = {});

/// Brute force and recurrence each reproduce the authoritative published E_n, n <= max_n (<= 7).
VerificationReport verify_golden(int max_n, EulerianTable& table, BruteOptions options = {});

/// coeff_recur(n,d,m) == E_n[x^d q^m] at every support point, 1 <= n <= max_n.
VerificationReport verify_coeff_recurrence(int max_n, EulerianTable& table);

/// f is weight-preserving, adds one descent, g(f(p)) = p, and f maps S_n
/// onto S'_{n+1}, for 1 <= n <= max_n.
VerificationReport verify_bijection(int max_n);

/// E_k[x^d] == E*_{k+1}[x^{d+1}] for 1 <= k <= max_k and all d.
VerificationReport verify_lemma45(int max_k, BruteOptions options = {});

/// Literal weight recursion == leading-one shortcut on every p of length <= max_n.
VerificationReport verify_weight_shortcut(int max_n);

/// eval_q1(en_recur(n)) == an_classical(n) for n <= max_recur, and the
/// x-coefficients equal direct descent counts for n <= max_count.
VerificationReport verify_classical(int max_recur, int max_count, EulerianTable& table);

/// wd_prefix(d, 5) matches the published prefixes, d = 1..5.
VerificationReport verify_w_prefixes(EulerianTable& table);

/// Table reproduction, enumerate/count agreement (n <= max_enum), the
/// partition theorem (k <= max_k, 2k <= d <= max_d), and the append lemma
/// over its whole domain for n <= max_lemma_n.
VerificationReport verify_partitions(int max_enum = 12, int max_k = 5, int max_d = 20, int max_lemma_n = 15);

/// check_conjecture_W over 1 <= k <= max_k, 2k <= d <= max_d.
VerificationReport verify_conjecture(int max_k, int max_d, EulerianTable& table);

/// W_d[t^k] == T(d+k, d) over 1 <= d <= max_d, 0 <= k <= d.
VerificationReport verify_w_t(int max_d, EulerianTable& table);

/// Published E_n vs computed, 8 <= n <= max_n (<= 10). Mismatches are
/// listed as notes; the report fails only if brute force (when n is within
/// the ceiling) and recurrence disagree.
VerificationReport appendix_diff(int max_n, EulerianTable& table, BruteOptions options = {});

} // namespace qeuler
