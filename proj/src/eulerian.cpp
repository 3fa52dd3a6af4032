#include "qeuler/eulerian.hpp"

#include "qeuler/enumerate.hpp"
#include "qeuler/permutation.hpp"

#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace qeuler {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::brute: return "brute";
    case Provenance::recurrence: return "recurrence";
    case Provenance::cache_file: return "cache-file";
    }
    return "unknown";
}

EulerianTable::EulerianTable(const EulerianTable& other)
    : entries_(other.snapshot())
{}

EulerianTable& EulerianTable::operator=(const EulerianTable& other)
{
    if (this != &other) {
        auto copy = other.snapshot();
        std::unique_lock lock(mutex_);
        entries_ = std::move(copy);
    }
    return *this;
}

std::shared_ptr<const BivariatePolynomial> EulerianTable::get(int n) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : it->second.poly;
}

std::optional<Provenance> EulerianTable::provenance(int n) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(n);
    if (it == entries_.end())
        return std::nullopt;
    return it->second.provenance;
}

void EulerianTable::insert(int n, BivariatePolynomial poly, Provenance provenance)
{
    if (auto problem = validate_en(n, poly))
        throw std::invalid_argument("E_" + std::to_string(n) + ": " + *problem);
    auto shared = std::make_shared<const BivariatePolynomial>(std::move(poly));
    std::unique_lock lock(mutex_);
    entries_.try_emplace(n, Entry{std::move(shared), provenance});
}

std::map<int, EulerianTable::Entry> EulerianTable::snapshot() const
{
    std::shared_lock lock(mutex_);
    return entries_;
}

std::size_t EulerianTable::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::optional<std::string> validate_en(int n, const BivariatePolynomial& poly)
{
    if (n < 0)
        return "negative n";
    const int max_d = std::max(n - 1, 0);
    for (const auto& [key, c] : poly.terms()) {
        const auto [d, m] = key;
        if (c <= 0)
            return "non-positive coefficient at x^" + std::to_string(d) + " q^" + std::to_string(m);
        if (d > max_d)
            return "x-exponent " + std::to_string(d) + " exceeds " + std::to_string(max_d);
        const int bound = n == 0 ? 0 : d * (n - d - 1);
        if (m > bound)
            return "q-exponent " + std::to_string(m) + " exceeds maxwt " + std::to_string(bound) + " at x^" + std::to_string(d);
    }
    if (poly.mass() != factorial(n))
        return "coefficient mass " + poly.mass().str() + " differs from " + factorial(n).str();
    return std::nullopt;
}

int default_enumeration_ceiling()
{
    if (const char* env = std::getenv("QEULER_ENUM_CEILING")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("QEULER_ENUM_CEILING is not an integer: ") + env);
        }
    }
    return 10;
}

namespace {

// Dense (d, m) counts for one work unit. n! fits in 64 bits for every n a
// ceiling could sensibly allow.
struct CountGrid {
    int width = 0;
    std::vector<std::uint64_t> counts;
};

BivariatePolynomial brute_sum(int n, BruteOptions options, bool ending_in_one)
{
    if (n > options.ceiling)
        throw std::domain_error("n = " + std::to_string(n) + " exceeds the enumeration ceiling "
                                + std::to_string(options.ceiling) + "; use the recurrence engine (--method recur)");
    if (n > 20)
        throw std::domain_error("brute-force enumeration beyond n = 20 overflows 64-bit counters");

    const int rows = std::max(n, 1);
    const int width = (n * n) / 4 + 1;
    auto make = [&] { return CountGrid{width, std::vector<std::uint64_t>(static_cast<std::size_t>(rows) * width)}; };
    auto visit = [](CountGrid& grid, std::span<const int> word) {
        const int d = descents(word);
        const int w = weight(word);
        ++grid.counts[static_cast<std::size_t>(d) * grid.width + w];
    };
    const auto units = enumerate_permutations<CountGrid>(n, {options.jobs, ending_in_one}, make, visit);

    std::vector<std::uint64_t> total(static_cast<std::size_t>(rows) * width);
    for (const auto& grid : units)
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] += grid.counts[i];

    BivariatePolynomial out;
    for (int d = 0; d < rows; ++d)
        for (int m = 0; m < width; ++m)
            if (auto c = total[static_cast<std::size_t>(d) * width + m])
                out.add_term(d, m, BigInt(c));
    return out;
}

} // namespace

BivariatePolynomial en_brute(int n, BruteOptions options)
{
    if (n < 0)
        throw std::domain_error("en_brute: negative n");
    return brute_sum(n, options, false);
}

BivariatePolynomial en_star_brute(int n, BruteOptions options)
{
    if (n < 1)
        throw std::domain_error("en_star_brute: n must be at least 1");
    return brute_sum(n, options, true);
}

BivariatePolynomial en_recur(int n, EulerianTable& table)
{
    if (n < 0)
        throw std::domain_error("en_recur: negative n");
    if (auto hit = table.get(n))
        return *hit;

    if (!table.contains(0))
        table.insert(0, BivariatePolynomial::constant(1), Provenance::recurrence);

    for (int k = 1; k <= n; ++k) {
        if (table.contains(k))
            continue;
        std::vector<std::shared_ptr<const BivariatePolynomial>> prev(k);
        for (int i = 0; i < k; ++i)
            prev[i] = table.get(i);

        BivariatePolynomial sum = prev[k - 1]->substitute_x_qx();
        for (int i = 1; i <= k - 1; ++i) {
            BivariatePolynomial term = *prev[i] * prev[k - i - 1]->substitute_x_qx();
            // Multiply by x * C(k-1, i).
            BivariatePolynomial shifted;
            const BigInt c = binomial(k - 1, i);
            for (const auto& [key, v] : term.terms())
                shifted.add_term(key.first + 1, key.second, v * c);
            sum += shifted;
        }
        table.insert(k, std::move(sum), Provenance::recurrence);
    }
    return *table.get(n);
}

BigInt coeff_recur(int n, int d, int m, EulerianTable& table)
{
    if (n < 1)
        throw std::domain_error("coeff_recur: n must be at least 1");
    if (d < 0 || m < 0 || d > n - 1)
        return 0;
    en_recur(n - 1, table);

    // dense[i][e] = E_i[x^e] as a dense q-coefficient list
    std::vector<std::vector<UnivariatePolynomial>> dense(n);
    for (int i = 0; i < n; ++i) {
        const auto poly = table.get(i);
        for (int e = 0; e <= std::max(i - 1, 0); ++e)
            dense[i].push_back(poly->coeff_x(e));
    }
    auto at = [&](int i, int e, int w) -> BigInt {
        if (e < 0 || w < 0 || e >= static_cast<int>(dense[i].size()))
            return 0;
        return dense[i][e].coeff(w);
    };

    BigInt total = 0;
    for (int i = 1; i <= n - 1; ++i) {
        BigInt inner = 0;
        for (int k = 1; k <= i; ++k) {
            if (d - k < 0)
                break;
            for (int j = 0; j <= m; ++j) {
                const int right = k + j - d;
                if (right < 0)
                    continue;
                BigInt a = at(n - i - 1, d - k, m - j);
                if (a == 0)
                    continue;
                inner += a * at(i, k - 1, right);
            }
        }
        if (inner != 0)
            total += binomial(n - 1, i) * inner;
    }
    total += at(n - 1, d, m - d);
    return total;
}

UnivariatePolynomial an_classical(int n)
{
    if (n < 0)
        throw std::domain_error("an_classical: negative n");
    std::vector<std::vector<BigInt>> a{{1}};
    auto multiply = [](const std::vector<BigInt>& u, const std::vector<BigInt>& v) {
        std::vector<BigInt> out(u.size() + v.size() - 1);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                out[i + j] += u[i] * v[j];
        return out;
    };
    for (int k = 1; k <= n; ++k) {
        std::vector<BigInt> next = a[k - 1];
        next.resize(static_cast<std::size_t>(k));
        for (int i = 1; i <= k - 1; ++i) {
            const auto prod = multiply(a[i], a[k - i - 1]);
            const BigInt c = binomial(k - 1, i);
            for (std::size_t e = 0; e < prod.size(); ++e)
                next[e + 1] += c * prod[e];
        }
        a.push_back(std::move(next));
    }
    return UnivariatePolynomial(a[n]);
}

} // namespace qeuler
