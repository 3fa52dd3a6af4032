#include "qeuler/partitions.hpp"

#include "qeuler/stabilization.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qeuler {

int TwoTypePartition::total() const
{
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

int TwoTypePartition::primed_count() const
{
    return static_cast<int>(std::count(primed.begin(), primed.end(), true));
}

std::string TwoTypePartition::render() const
{
    if (parts.empty())
        return "()";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // Multi-digit parts would run together, so separate them.
        if (i > 0 && (parts[i] > 9 || parts[i - 1] > 9))
            out += ' ';
        out += std::to_string(parts[i]);
        if (primed[i])
            out += '\'';
    }
    return out;
}

namespace {

void partitions_desc(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_desc(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<TwoTypePartition> enumerate_ttp(int n, int k)
{
    std::vector<TwoTypePartition> out;
    if (n < 0 || k < 0)
        return out;
    std::vector<std::vector<int>> plain;
    std::vector<int> current;
    partitions_desc(n, n, current, plain);
    for (const auto& parts : plain) {
        const int len = static_cast<int>(parts.size());
        if (k > len)
            continue;
        // Largest binary string first: primes in the leading slots.
        std::vector<char> pattern(len, 0);
        std::fill(pattern.begin(), pattern.begin() + k, 1);
        do {
            out.push_back({parts, std::vector<bool>(pattern.begin(), pattern.end())});
        } while (std::prev_permutation(pattern.begin(), pattern.end()));
    }
    return out;
}

namespace {

// Grows by sweeping part values: after processing value v, dp[s][p] counts
// two-type partitions of s with p primes using parts <= v.
std::vector<std::vector<BigInt>> compute_rows(int max_n)
{
    const int N = max_n;
    std::vector<std::vector<BigInt>> dp(N + 1, std::vector<BigInt>(N + 1));
    dp[0][0] = 1;
    for (int v = 1; v <= N; ++v) {
        auto next = dp;
        for (int s = v; s <= N; ++s) {
            for (int p = 0; p <= s; ++p) {
                BigInt acc = 0;
                for (int c = 1; c * v <= s; ++c)
                    for (int j = 0; j <= std::min(c, p); ++j)
                        if (dp[s - c * v][p - j] != 0)
                            acc += dp[s - c * v][p - j] * binomial(c, j);
                next[s][p] += acc;
            }
        }
        dp = std::move(next);
    }
    std::vector<std::vector<BigInt>> rows(N + 1);
    for (int n = 0; n <= N; ++n)
        rows[n].assign(dp[n].begin(), dp[n].begin() + n + 1);
    return rows;
}

std::mutex table_mutex;
std::vector<std::vector<BigInt>> cached_rows;

} // namespace

std::vector<std::vector<BigInt>> partition_table(int max_n)
{
    if (max_n < 0)
        return {};
    std::lock_guard lock(table_mutex);
    if (static_cast<int>(cached_rows.size()) <= max_n)
        cached_rows = compute_rows(std::max(max_n, 2 * static_cast<int>(cached_rows.size())));
    return {cached_rows.begin(), cached_rows.begin() + max_n + 1};
}

BigInt count_T(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    return partition_table(n)[n][k];
}

const std::vector<std::vector<int>>& table1()
{
    static const std::vector<std::vector<int>> rows = {
        {1},
        {1, 1},
        {2, 3, 1},
        {3, 6, 4, 1},
        {5, 12, 11, 5, 1},
        {7, 20, 24, 16, 6, 1},
        {11, 35, 49, 41, 22, 7, 1},
        {15, 54, 89, 91, 63, 29, 8, 1},
        {22, 86, 158, 186, 155, 92, 37, 9, 1},
        {30, 128, 262, 351, 342, 247, 129, 46, 10, 1},
    };
    return rows;
}

bool is_w_region(int n, int k)
{
    return k >= 0 && k <= n && n - k <= k;
}

VerificationReport check_append_lemma(int n, int k, int b)
{
    if (n < 0 || k < 0 || b < 0 || b > 2 * k - n)
        throw std::domain_error("outside lemma domain");
    VerificationReport report;
    report.check = "append-lemma";
    report.range = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " b=" + std::to_string(b);
    BigInt rhs = 0;
    for (int j = 0; j <= b; ++j)
        rhs += binomial(b, j) * count_T(n - b, k - j);
    const BigInt lhs = count_T(n, k);
    report.checked = 1;
    if (lhs != rhs)
        report.violations.push_back({n, k, b, rhs.str(), lhs.str(), ""});
    return report;
}

namespace {

BigInt alternating_sum(int k, const auto& term)
{
    BigInt sum = 1;
    for (int i = 1; i <= k; ++i) {
        const BigInt t = binomial(k, i) * term(i);
        if (i % 2 == 1)
            sum += t;
        else
            sum -= t;
    }
    return sum;
}

} // namespace

VerificationReport check_thm_T(int k, int d)
{
    if (k < 1 || d < 2 * k)
        throw std::domain_error("outside theorem domain");
    VerificationReport report;
    report.check = "partition-theorem";
    report.range = "k=" + std::to_string(k) + " d=" + std::to_string(d);
    const BigInt rhs = alternating_sum(k, [&](int i) { return count_T(d + k - i, d - i); });
    const BigInt lhs = count_T(d + k, d);
    report.checked = 1;
    if (lhs != rhs)
        report.violations.push_back({d + k, d, k, rhs.str(), lhs.str(), ""});
    return report;
}

VerificationReport check_conjecture_W(int k, int d, EulerianTable& table)
{
    if (k < 1 || d < 2 * k)
        throw std::domain_error("outside conjecture domain");
    VerificationReport report;
    report.check = "conjecture-W";
    report.range = "k=" + std::to_string(k) + " d=" + std::to_string(d);
    report.severity = Severity::conjecture;
    const BigInt rhs = alternating_sum(k, [&](int i) { return stabilized_coeff(d - i, k, table); });
    const BigInt lhs = stabilized_coeff(d, k, table);
    report.checked = 1;
    if (lhs != rhs)
        report.violations.push_back({d + k + 1, d, k, rhs.str(), lhs.str(), "evidence against the conjectured identity"});
    return report;
}

VerificationReport check_W_T_correspondence(int d, int k, EulerianTable& table)
{
    if (d < 1 || k < 0 || k > d)
        throw std::domain_error("W/T correspondence is checked only for 0 <= k <= d, d >= 1");
    VerificationReport report;
    report.check = "W-T-correspondence";
    report.range = "d=" + std::to_string(d) + " k=" + std::to_string(k);
    const BigInt w = stabilized_coeff(d, k, table);
    const BigInt t = count_T(d + k, d);
    report.checked = 1;
    report.notes.push_back("W_" + std::to_string(d) + "[t^" + std::to_string(k) + "] = " + w.str() + ", T("
                           + std::to_string(d + k) + "," + std::to_string(d) + ") = " + t.str());
    if (w != t)
        report.violations.push_back({d + k, d, k, t.str(), w.str(), ""});
    return report;
}

std::string render_table_text(int max_n)
{
    const auto rows = partition_table(max_n);
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& v : row)
            width = std::max(width, v.str().size());
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            const std::string s = row[k].str();
            if (k > 0)
                out += ' ';
            out += std::string(width - s.size(), ' ') + s;
        }
        out += '\n';
    }
    return out;
}

std::string render_table_csv(int max_n)
{
    const auto rows = partition_table(max_n);
    std::string out = "n,k,T\n";
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k)
            out += std::to_string(n) + ',' + std::to_string(k) + ',' + rows[n][k].str() + '\n';
    return out;
}

std::string render_bfile(int max_n)
{
    const auto rows = partition_table(max_n);
    std::string out;
    std::size_t index = 0;
    for (const auto& row : rows)
        for (const auto& v : row)
            out += std::to_string(index++) + ' ' + v.str() + '\n';
    return out;
}

} // namespace qeuler
