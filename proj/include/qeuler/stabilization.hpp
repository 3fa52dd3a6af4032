#pragma once

#include "qeuler/eulerian.hpp"
#include "qeuler/report.hpp"

#include <string>
#include <vector>

namespace qeuler {

/// Leading coefficients of W_d(t): coeffs[k] = E_{d+k+1}[x^d q^{(d-1)k}].
struct SeriesPrefix {
    int d = 0;
    std::vector<BigInt> coeffs;

    int terms() const { return static_cast<int>(coeffs.size()) - 1; }
    /// "1 + 3t + 7t^2 + ..."
    std::string render() const;
    /// "1,3,7,..."
    std::string render_csv() const;
};

/// W_d[t^k]. Requires d >= 1, k >= 0.
BigInt stabilized_coeff(int d, int k, EulerianTable& table);

SeriesPrefix wd_prefix(int d, int terms, EulerianTable& table);

/// Whether E_n[x^d q^m] already equals E_{n-1}[x^d q^{m-d}]:
/// m >= (d-1)(n-d-1)+1, with d = 0 always stabilized and d = n-1 never.
/// Throws std::domain_error unless 0 <= d <= n-1.
bool is_stabilized(int n, int d, int m);

/// For 3 <= n <= n_max and 1 <= d <= n-2, the shift identity holds for every
/// m above the threshold and fails at and below it. Requires n_max >= 2.
VerificationReport verify_shift(int n_max, EulerianTable& table);

/// For each (d, k) with d+k+1 <= n_max, E_n[x^d q^{maxwt(n,d)-k}] is the
/// same for every d+k+1 <= n <= n_max. Requires n_max >= 2.
VerificationReport verify_stabilization(int n_max, EulerianTable& table);

/// Exhaustive over S_n, n <= n_max: disparity >= n-d-1 when the first entry
/// is not 1, and among permutations ending in 1 the maximum weight with d
/// descents is exactly (d-1)(n-d-1). Also checks 0 <= w <= maxwt with the
/// bound attained for each d.
VerificationReport verify_disparity(int n_max, unsigned jobs = 0);

/// The boundary conventions: E_n[x^0 q^0] equals E_{n-1}[x^0 q^0] and
/// E_n[x^{n-1} q^0] differs from E_{n-1}[x^{n-1} q^{-(n-1)}] = 0, 2 <= n <= n_max.
VerificationReport verify_boundary_conventions(int n_max, EulerianTable& table);

} // namespace qeuler
