#include "qeuler/verify.hpp"

#include "qeuler/enumerate.hpp"
#include "qeuler/golden.hpp"
#include "qeuler/partitions.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/stabilization.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qeuler {

namespace {

void compare_polys(VerificationReport& report, int n, const BivariatePolynomial& expected,
                   const BivariatePolynomial& actual, const std::string& note)
{
    ++report.checked;
    for (const auto& t : diff_terms(expected, actual))
        report.violations.push_back({n, t.d, t.m, t.expected.str(), t.actual.str(), note});
}

} // namespace

VerificationReport verify_recurrence(int max_n, EulerianTable& table, BruteOptions options)
{
    VerificationReport report;
    report.check = "recurrence";
    report.range = "0 <= n <= " + std::to_string(max_n);
    for (int n = 0; n <= max_n; ++n)
        compare_polys(report, n, en_brute(n, options), en_recur(n, table), "brute vs recurrence");
    report.normalize();
    return report;
}

VerificationReport verify_golden(int max_n, EulerianTable& table, BruteOptions options)
{
    if (max_n > 7)
        throw std::domain_error("authoritative published data covers n <= 7");
    VerificationReport report;
    report.check = "golden";
    report.range = "0 <= n <= " + std::to_string(max_n);
    for (int n = 0; n <= max_n; ++n) {
        const auto golden = golden_en(n);
        for (const auto& note : golden.notes)
            report.violations.push_back({n, std::nullopt, std::nullopt, "clean transcription", note.message, "parse"});
        compare_polys(report, n, en_brute(n, options), golden.value, "brute vs published");
        compare_polys(report, n, en_recur(n, table), golden.value, "recurrence vs published");
    }
    report.normalize();
    return report;
}

VerificationReport verify_coeff_recurrence(int max_n, EulerianTable& table)
{
    VerificationReport report;
    report.check = "coefficient-recurrence";
    report.range = "1 <= n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        const auto poly = en_recur(n, table);
        for (int d = 0; d <= n - 1; ++d) {
            for (int m = 0; m <= maxwt(n, d); ++m) {
                ++report.checked;
                const BigInt expected = poly.coeff_xq(d, m);
                const BigInt actual = coeff_recur(n, d, m, table);
                if (expected != actual)
                    report.violations.push_back({n, d, m, expected.str(), actual.str(), ""});
            }
        }
    }
    report.normalize();
    return report;
}

VerificationReport verify_bijection(int max_n)
{
    VerificationReport report;
    report.check = "bijection";
    report.range = "1 <= n <= " + std::to_string(max_n);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> word(n);
        std::iota(word.begin(), word.end(), 1);
        std::set<Word> images;
        std::int64_t count = 0;
        do {
            ++count;
            ++report.checked;
            const Permutation p(word);
            const Permutation f = bij_f(p);
            auto fail = [&](const std::string& what, const std::string& expected, const std::string& actual) {
                report.violations.push_back({n, descents(p), weight(p), expected, actual, what + " at " + p.to_string()});
            };
            if (f.size() != n + 1 || !f.ends_with_one() || !f.is_canonical())
                fail("image not in S'_{n+1}", "ends in 1", f.to_string());
            if (weight(f) != weight(p))
                fail("weight", std::to_string(weight(p)), std::to_string(weight(f)));
            if (descents(f) != descents(p) + 1)
                fail("descents", std::to_string(descents(p) + 1), std::to_string(descents(f)));
            const Permutation back = bij_g(f);
            if (back != p)
                fail("g(f(p))", p.to_string(), back.to_string());
            images.insert(f.word());
        } while (std::next_permutation(word.begin(), word.end()));
        // |S'_{n+1}| = n!, so n! distinct images inside S'_{n+1} exhaust it.
        ++report.checked;
        if (static_cast<std::int64_t>(images.size()) != count)
            report.violations.push_back({n, std::nullopt, std::nullopt, std::to_string(count) + " distinct images",
                                         std::to_string(images.size()), "injectivity"});
    }
    report.normalize();
    return report;
}

VerificationReport verify_lemma45(int max_k, BruteOptions options)
{
    VerificationReport report;
    report.check = "lemma45";
    report.range = "1 <= k <= " + std::to_string(max_k);
    for (int k = 1; k <= max_k; ++k) {
        const auto en = en_brute(k, options);
        const auto star = en_star_brute(k + 1, options);
        for (int d = 0; d <= k + 1; ++d) {
            ++report.checked;
            const auto lhs = en.coeff_x(d);
            const auto rhs = star.coeff_x(d + 1);
            if (lhs != rhs)
                report.violations.push_back({k, d, std::nullopt, lhs.render('q', true), rhs.render('q', true), "E*_{k+1}[x^{d+1}]"});
        }
        // Nothing may sit at x^0 in E*_{k+1}.
        ++report.checked;
        if (!star.coeff_x(0).is_zero())
            report.violations.push_back({k, -1, std::nullopt, "0", star.coeff_x(0).render('q', true), "E*_{k+1}[x^0]"});
    }
    report.normalize();
    return report;
}

VerificationReport verify_weight_shortcut(int max_n)
{
    VerificationReport report;
    report.check = "weight-shortcut";
    report.range = "0 <= n <= " + std::to_string(max_n);
    const WeightOptions literal{false, false};
    const WeightOptions shortcut{true, false};
    for (int n = 0; n <= max_n; ++n) {
        std::vector<int> word(n);
        std::iota(word.begin(), word.end(), 1);
        do {
            ++report.checked;
            const int a = weight(std::span<const int>(word), literal);
            const int b = weight(std::span<const int>(word), shortcut);
            if (a != b && report.violations.size() < 100)
                report.violations.push_back({n, descents(word), std::nullopt, std::to_string(a), std::to_string(b), render_word(word)});
        } while (std::next_permutation(word.begin(), word.end()));
    }
    report.normalize();
    return report;
}

VerificationReport verify_classical(int max_recur, int max_count, EulerianTable& table)
{
    VerificationReport report;
    report.check = "classical";
    report.range = "n <= " + std::to_string(max_recur) + " (descent counts n <= " + std::to_string(max_count) + ")";
    for (int n = 0; n <= max_recur; ++n) {
        ++report.checked;
        const auto collapsed = en_recur(n, table).eval_q1();
        const auto classical = an_classical(n);
        if (collapsed != classical)
            report.violations.push_back({n, std::nullopt, std::nullopt, classical.render('x'), collapsed.render('x'), "q = 1"});
        for (int d = 0; d <= n - 1; ++d) {
            ++report.checked;
            if (classical.coeff(d) != classical.coeff(n - 1 - d))
                report.violations.push_back({n, d, std::nullopt, classical.coeff(n - 1 - d).str(), classical.coeff(d).str(), "symmetry"});
        }
    }
    for (int n = 0; n <= max_count; ++n) {
        auto make = [n] { return std::vector<std::uint64_t>(std::max(n, 1)); };
        auto visit = [](std::vector<std::uint64_t>& counts, std::span<const int> word) { ++counts[descents(word)]; };
        const auto units = enumerate_permutations<std::vector<std::uint64_t>>(n, {}, make, visit);
        std::vector<BigInt> counts(std::max(n, 1));
        for (const auto& u : units)
            for (std::size_t d = 0; d < u.size(); ++d)
                counts[d] += u[d];
        const UnivariatePolynomial direct(counts);
        ++report.checked;
        const auto collapsed = en_recur(n, table).eval_q1();
        if (direct != collapsed)
            report.violations.push_back({n, std::nullopt, std::nullopt, direct.render('x'), collapsed.render('x'), "descent counts"});
    }
    report.normalize();
    return report;
}

VerificationReport verify_w_prefixes(EulerianTable& table)
{
    VerificationReport report;
    report.check = "w-prefixes";
    report.range = "1 <= d <= 5, 0 <= k <= 5";
    for (int d = 1; d <= 5; ++d) {
        const auto& published = golden_w_prefix(d);
        const auto computed = wd_prefix(d, 5, table);
        for (int k = 0; k <= 5; ++k) {
            ++report.checked;
            if (computed.coeffs[k] != published[k])
                report.violations.push_back({d + k + 1, d, k, std::to_string(published[k]), computed.coeffs[k].str(), "W_d[t^k]"});
        }
    }
    report.normalize();
    return report;
}

VerificationReport verify_partitions(int max_enum, int max_k, int max_d, int max_lemma_n)
{
    VerificationReport report;
    report.check = "partitions";
    report.range = "enumeration n <= " + std::to_string(max_enum) + ", theorem k <= " + std::to_string(max_k) + " d <= "
                   + std::to_string(max_d) + ", lemma n <= " + std::to_string(max_lemma_n);

    const auto& published = table1();
    for (int n = 0; n < static_cast<int>(published.size()); ++n) {
        for (int k = 0; k <= n; ++k) {
            ++report.checked;
            if (count_T(n, k) != published[n][k])
                report.violations.push_back({n, k, std::nullopt, std::to_string(published[n][k]), count_T(n, k).str(), "table"});
        }
    }
    for (int n = 0; n <= max_enum; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            ++report.checked;
            const auto listed = enumerate_ttp(n, k).size();
            if (BigInt(listed) != count_T(n, k))
                report.violations.push_back({n, k, std::nullopt, count_T(n, k).str(), std::to_string(listed), "enumeration"});
        }
    }
    for (int k = 1; k <= max_k; ++k)
        for (int d = 2 * k; d <= max_d; ++d)
            report.merge(check_thm_T(k, d));
    for (int n = 0; n <= max_lemma_n; ++n)
        for (int k = 0; k <= n; ++k)
            for (int b = 0; b <= 2 * k - n; ++b)
                report.merge(check_append_lemma(n, k, b));
    report.check = "partitions";
    report.normalize();
    return report;
}

VerificationReport verify_conjecture(int max_k, int max_d, EulerianTable& table)
{
    VerificationReport report;
    report.check = "conjecture-W";
    report.severity = Severity::conjecture;
    report.range = "1 <= k <= " + std::to_string(max_k) + ", 2k <= d <= " + std::to_string(max_d);
    for (int k = 1; k <= max_k; ++k)
        for (int d = 2 * k; d <= max_d; ++d)
            report.merge(check_conjecture_W(k, d, table));
    report.notes.push_back("finite-range evidence only; the identity is not proven");
    return report;
}

VerificationReport verify_w_t(int max_d, EulerianTable& table)
{
    VerificationReport report;
    report.check = "W-T-correspondence";
    report.range = "1 <= d <= " + std::to_string(max_d) + ", 0 <= k <= d";
    for (int d = 1; d <= max_d; ++d)
        for (int k = 0; k <= d; ++k) {
            auto r = check_W_T_correspondence(d, k, table);
            r.notes.clear();
            report.merge(r);
        }
    return report;
}

VerificationReport appendix_diff(int max_n, EulerianTable& table, BruteOptions options)
{
    if (max_n > 10)
        throw std::domain_error("published data covers n <= 10");
    VerificationReport report;
    report.check = "appendix";
    report.range = "8 <= n <= " + std::to_string(max_n);
    for (int n = 8; n <= max_n; ++n) {
        const auto recur = en_recur(n, table);
        if (n <= options.ceiling)
            compare_polys(report, n, en_brute(n, options), recur, "brute vs recurrence");
        else
            report.notes.push_back("E_" + std::to_string(n) + ": brute force skipped (above ceiling)");
        const auto golden = golden_en(n);
        for (const auto& note : golden.notes)
            report.notes.push_back("E_" + std::to_string(n) + " transcription: " + note.message);
        const auto diffs = diff_terms(recur, golden.value);
        for (const auto& t : diffs)
            report.notes.push_back("E_" + std::to_string(n) + " x^" + std::to_string(t.d) + " q^" + std::to_string(t.m)
                                   + ": computed " + t.expected.str() + ", transcribed " + t.actual.str());
        if (diffs.empty())
            report.notes.push_back("E_" + std::to_string(n) + ": transcription matches");
    }
    report.normalize();
    return report;
}

} // namespace qeuler
