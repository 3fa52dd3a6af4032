#pragma once

#include "qeuler/polynomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace qeuler {

enum class Provenance { brute, recurrence, cache_file };

std::string to_string(Provenance p);

/// Validated E_n polynomials keyed by n. Concurrent readers, serialized writers.
class EulerianTable {
public:
    struct Entry {
        std::shared_ptr<const BivariatePolynomial> poly;
        Provenance provenance = Provenance::recurrence;
    };

    EulerianTable() = default;
    EulerianTable(const EulerianTable& other);
    EulerianTable& operator=(const EulerianTable& other);

    /// nullptr when absent.
    std::shared_ptr<const BivariatePolynomial> get(int n) const;
    std::optional<Provenance> provenance(int n) const;
    bool contains(int n) const { return get(n) != nullptr; }

    /// Validates the E_n invariants (see validate_en) and stores the entry.
    /// An existing entry is kept. Throws std::invalid_argument naming n.
    void insert(int n, BivariatePolynomial poly, Provenance provenance);

    std::map<int, Entry> snapshot() const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<int, Entry> entries_;
};

/// Empty when `poly` looks like a valid E_n (mass n!, 0 <= m <= d(n-d-1),
/// d <= max(n-1, 0), positive coefficients); otherwise a description.
std::optional<std::string> validate_en(int n, const BivariatePolynomial& poly);

struct BruteOptions {
    int ceiling = 10;
    unsigned jobs = 0;
};

/// Default ceiling, honoring QEULER_ENUM_CEILING.
int default_enumeration_ceiling();

/// Sum of x^des q^w over S_n. Throws std::domain_error above the ceiling.
BivariatePolynomial en_brute(int n, BruteOptions options = {});

/// Same sum over permutations ending in 1 (n >= 1).
BivariatePolynomial en_star_brute(int n, BruteOptions options = {});

/// E_n via the binomial convolution recurrence, memoizing E_0..E_n in `table`.
BivariatePolynomial en_recur(int n, EulerianTable& table);

/// The coefficient E_n[x^d q^m] via the triple-sum recurrence, reading
/// E_0..E_{n-1} from `table` (filled on demand). Zero outside the support.
BigInt coeff_recur(int n, int d, int m, EulerianTable& table);

/// Classical Eulerian polynomial A_n(x).
UnivariatePolynomial an_classical(int n);

} // namespace qeuler
