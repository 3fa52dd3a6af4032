#include "oracle.hpp"
#include "qeuler/golden.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/stabilization.hpp"

#include <doctest.h>

using namespace qeuler;

TEST_CASE("stabilized coefficients against the naive oracle")
{
    EulerianTable table;
    for (int d = 1; d <= 6; ++d)
        for (int k = 0; d + k + 1 <= 8; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            const auto counts = oracle::eulerian_counts(d + k + 1);
            const auto it = counts.find({d, (d - 1) * k});
            const std::int64_t expected = it == counts.end() ? 0 : it->second;
            CHECK(stabilized_coeff(d, k, table) == expected);
        }
}

TEST_CASE("stabilized coefficient examples")
{
    EulerianTable table;
    CHECK(stabilized_coeff(2, 1, table) == 4);
    CHECK(stabilized_coeff(5, 3, table) == 92);
    for (int d = 1; d <= 6; ++d)
        CHECK(stabilized_coeff(d, 0, table) == 1);
    CHECK_THROWS(stabilized_coeff(0, 1, table));
    CHECK_THROWS(stabilized_coeff(1, -1, table));
}

TEST_CASE("W_d prefixes")
{
    EulerianTable table;
    for (int d = 1; d <= 5; ++d) {
        CAPTURE(d);
        const auto prefix = wd_prefix(d, 5, table);
        const auto& published = golden_w_prefix(d);
        REQUIRE(prefix.coeffs.size() == published.size());
        for (std::size_t k = 0; k < published.size(); ++k)
            CHECK(prefix.coeffs[k] == published[k]);
    }
    const auto w5 = wd_prefix(5, 5, table);
    CHECK(w5.render() == "1 + 7t + 29t^2 + 92t^3 + 247t^4 + 590t^5");
    CHECK(w5.render_csv() == "1,7,29,92,247,590");
    CHECK(wd_prefix(3, 0, table).render() == "1");
    CHECK_THROWS_AS(golden_w_prefix(6), std::out_of_range);
}

TEST_CASE("stabilization threshold")
{
    CHECK(is_stabilized(5, 0, 0));
    CHECK_FALSE(is_stabilized(5, 4, 6));
    CHECK(is_stabilized(5, 2, 3));
    CHECK_FALSE(is_stabilized(5, 2, 2));
    CHECK(is_stabilized(5, 1, 1));
    CHECK_FALSE(is_stabilized(5, 1, 0));
    CHECK_THROWS_AS(is_stabilized(5, 5, 0), std::domain_error);
    CHECK_THROWS_AS(is_stabilized(5, -1, 0), std::domain_error);
    CHECK_THROWS_AS(is_stabilized(5, 2, -1), std::domain_error);

    // The threshold predicts exactly where the shift identity holds.
    for (int n = 3; n <= 8; ++n) {
        const auto cur = oracle::eulerian_counts(n);
        const auto prev = oracle::eulerian_counts(n - 1);
        auto at = [](const auto& counts, int d, int m) -> std::int64_t {
            const auto it = counts.find({d, m});
            return it == counts.end() ? 0 : it->second;
        };
        for (int d = 1; d <= n - 2; ++d)
            for (int m = 0; m <= maxwt(n, d); ++m) {
                CAPTURE(n);
                CAPTURE(d);
                CAPTURE(m);
                CHECK(is_stabilized(n, d, m) == (at(cur, d, m) == at(prev, d, m - d)));
            }
    }
}

TEST_CASE("stable column for d = 2, k = 3")
{
    EulerianTable table;
    for (int n = 6; n <= 10; ++n) {
        const auto e = en_recur(n, table);
        CHECK(e.coeff_xq(2, maxwt(n, 2) - 3) == 31);
    }
}

TEST_CASE("shift verification")
{
    EulerianTable table;
    CHECK_THROWS(verify_shift(1, table));
    CHECK(verify_shift(7, table).passed());
    const auto report = verify_shift(10, table);
    CHECK(report.passed());
    CHECK(report.checked > 0);
}

TEST_CASE("stabilization verification")
{
    EulerianTable table;
    const auto report = verify_stabilization(10, table);
    CHECK(report.passed());
    CHECK(report.checked > 0);
    CHECK(verify_stabilization(11, table).passed());
}

TEST_CASE("disparity verification")
{
    const auto report = verify_disparity(8);
    CHECK(report.passed());
    CHECK(report.checked > 0);
    CHECK(verify_disparity(1).passed());
}

TEST_CASE("boundary conventions")
{
    EulerianTable table;
    CHECK(verify_boundary_conventions(10, table).passed());
}
