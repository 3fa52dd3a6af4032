#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qeuler {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k) read from a shared Pascal triangle.
/// Returns 0 outside 0 <= k <= n.
BigInt binomial(int n, int k);

BigInt factorial(int n);

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace qeuler
