#include "qeuler/stabilization.hpp"

#include "qeuler/enumerate.hpp"
#include "qeuler/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace qeuler {

std::string SeriesPrefix::render() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0)
            out += " + ";
        if (k == 0 || coeffs[k] != 1)
            out += coeffs[k].str();
        if (k >= 1)
            out += 't';
        if (k >= 2)
            out += '^' + std::to_string(k);
    }
    return out;
}

std::string SeriesPrefix::render_csv() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0)
            out += ',';
        out += coeffs[k].str();
    }
    return out;
}

BigInt stabilized_coeff(int d, int k, EulerianTable& table)
{
    if (d < 1 || k < 0)
        throw std::domain_error("stabilized_coeff requires d >= 1 and k >= 0");
    const auto poly = en_recur(d + k + 1, table);
    return poly.coeff_xq(d, (d - 1) * k);
}

SeriesPrefix wd_prefix(int d, int terms, EulerianTable& table)
{
    if (d < 1 || terms < 0)
        throw std::domain_error("wd_prefix requires d >= 1 and terms >= 0");
    SeriesPrefix s;
    s.d = d;
    for (int k = 0; k <= terms; ++k)
        s.coeffs.push_back(stabilized_coeff(d, k, table));
    return s;
}

bool is_stabilized(int n, int d, int m)
{
    if (d < 0 || d > n - 1)
        throw std::domain_error("is_stabilized: d = " + std::to_string(d) + " out of range for n = " + std::to_string(n));
    if (m < 0)
        throw std::domain_error("is_stabilized: negative m");
    if (d == 0)
        return true;
    if (d == n - 1)
        return false;
    return m >= (d - 1) * (n - d - 1) + 1;
}

VerificationReport verify_shift(int n_max, EulerianTable& table)
{
    if (n_max < 2)
        throw std::domain_error("verify_shift requires n_max >= 2");
    VerificationReport report;
    report.check = "shift";
    report.range = "2 <= n <= " + std::to_string(n_max);
    en_recur(n_max, table);
    for (int n = 2; n <= n_max; ++n) {
        const auto cur = table.get(n);
        const auto prev = table.get(n - 1);
        for (int d = 1; d <= n - 2; ++d) {
            const int threshold = (d - 1) * (n - d - 1) + 1;
            for (int m = 0; m <= maxwt(n, d); ++m) {
                const BigInt lhs = cur->coeff_xq(d, m);
                const BigInt rhs = m - d >= 0 ? prev->coeff_xq(d, m - d) : BigInt(0);
                const bool expect_equal = m >= threshold;
                if (expect_equal != is_stabilized(n, d, m))
                    report.violations.push_back({n, d, m, "predicate agrees", "predicate disagrees", "is_stabilized"});
                ++report.checked;
                if ((lhs == rhs) != expect_equal)
                    report.violations.push_back(
                        {n, d, m, std::string(expect_equal ? "equal to " : "different from ") + rhs.str(), lhs.str(),
                         expect_equal ? "case (i): above threshold" : (m + 1 == threshold ? "case (ii): at threshold" : "case (iii): below threshold")});
            }
        }
    }
    report.normalize();
    return report;
}

VerificationReport verify_stabilization(int n_max, EulerianTable& table)
{
    if (n_max < 2)
        throw std::domain_error("verify_stabilization requires n_max >= 2");
    VerificationReport report;
    report.check = "stabilization";
    report.range = "d + k + 1 <= n <= " + std::to_string(n_max);
    en_recur(n_max, table);
    for (int d = 0; d + 1 <= n_max; ++d) {
        for (int k = 0; d + k + 1 <= n_max; ++k) {
            const int first = d + k + 1;
            auto value_at = [&](int n) {
                const int m = maxwt(n, d) - k;
                return m < 0 ? BigInt(0) : table.get(n)->coeff_xq(d, m);
            };
            const BigInt base = value_at(first);
            for (int n = first + 1; n <= n_max; ++n) {
                ++report.checked;
                const BigInt v = value_at(n);
                if (v != base)
                    report.violations.push_back({n, d, maxwt(n, d) - k, base.str(), v.str(), "k=" + std::to_string(k)});
            }
        }
    }
    report.normalize();
    return report;
}

namespace {

struct DisparityState {
    std::vector<Violation> violations;
    std::vector<int> max_weight;        // by d, all permutations
    std::vector<int> max_weight_end1;   // by d, permutations ending in 1
    std::int64_t checked = 0;
};

} // namespace

VerificationReport verify_disparity(int n_max, unsigned jobs)
{
    VerificationReport report;
    report.check = "disparity";
    report.range = "1 <= n <= " + std::to_string(n_max);
    constexpr std::size_t kViolationCap = 100;

    for (int n = 1; n <= n_max; ++n) {
        auto make = [n] {
            return DisparityState{{}, std::vector<int>(n, -1), std::vector<int>(n, -1), 0};
        };
        auto visit = [n](DisparityState& s, std::span<const int> word) {
            const int d = descents(word);
            const int w = weight(word);
            const int top = maxwt(n, d);
            ++s.checked;
            s.max_weight[d] = std::max(s.max_weight[d], w);
            if (word.back() == 1)
                s.max_weight_end1[d] = std::max(s.max_weight_end1[d], w);
            if (w > top && s.violations.size() < kViolationCap)
                s.violations.push_back({n, d, w, "weight <= " + std::to_string(top), std::to_string(w), render_word(word)});
            if (word.front() != 1 && top - w < n - d - 1 && s.violations.size() < kViolationCap)
                s.violations.push_back({n, d, w, "disparity >= " + std::to_string(n - d - 1), std::to_string(top - w),
                                        render_word(word)});
        };
        const auto units = enumerate_permutations<DisparityState>(n, {jobs, false}, make, visit);

        std::vector<int> max_weight(n, -1), max_end1(n, -1);
        for (const auto& s : units) {
            for (const auto& v : s.violations)
                if (report.violations.size() < kViolationCap)
                    report.violations.push_back(v);
            report.checked += s.checked;
            for (int d = 0; d < n; ++d) {
                max_weight[d] = std::max(max_weight[d], s.max_weight[d]);
                max_end1[d] = std::max(max_end1[d], s.max_weight_end1[d]);
            }
        }
        for (int d = 0; d < n; ++d) {
            if (max_weight[d] != maxwt(n, d))
                report.violations.push_back({n, d, std::nullopt, "max weight " + std::to_string(maxwt(n, d)),
                                             std::to_string(max_weight[d]), "maxwt attained"});
            if (n >= 2 && d >= 1) {
                const int expected = (d - 1) * (n - d - 1);
                if (max_end1[d] != expected)
                    report.violations.push_back({n, d, std::nullopt, "max weight ending in 1 = " + std::to_string(expected),
                                                 std::to_string(max_end1[d]), "ending-in-1 maximum"});
            }
        }
    }
    report.normalize();
    return report;
}

VerificationReport verify_boundary_conventions(int n_max, EulerianTable& table)
{
    VerificationReport report;
    report.check = "boundary";
    report.range = "2 <= n <= " + std::to_string(n_max);
    en_recur(std::max(n_max, 1), table);
    for (int n = 2; n <= n_max; ++n) {
        const auto cur = table.get(n);
        const auto prev = table.get(n - 1);
        report.checked += 2;
        if (cur->coeff_xq(0, 0) != prev->coeff_xq(0, 0))
            report.violations.push_back({n, 0, 0, "stabilized", "not stabilized", "E_n[x^0 q^0]"});
        if (cur->coeff_xq(n - 1, 0) == 0)
            report.violations.push_back({n, n - 1, 0, "not stabilized", "stabilized", "E_n[x^{n-1} q^0]"});
    }
    report.normalize();
    return report;
}

} // namespace qeuler
