#pragma once

#include "qeuler/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

/// Published E_n(x,q) for n <= 10. For n <= 7 the text is authoritative;
/// for 8..10 it is reference data that is known to contain transcription
/// slips, which surface as notes and in diff_against.
struct GoldenPolynomial {
    int n = 0;
    std::string_view text; ///< literal source text
    BivariatePolynomial value;
    std::vector<ParseNote> notes;
    bool authoritative = false;
};

/// Throws std::out_of_range for n outside [0, 10].
GoldenPolynomial golden_en(int n);

struct TermDiff {
    int d = 0;
    int m = 0;
    BigInt expected; ///< computed value
    BigInt actual;   ///< transcribed value
};

/// Terms where `computed` and `transcribed` disagree, sorted by (d, m).
std::vector<TermDiff> diff_terms(const BivariatePolynomial& computed, const BivariatePolynomial& transcribed);

} // namespace qeuler

namespace qeuler {

/// Published W_d(t) prefixes, d = 1..5, six coefficients each.
/// Throws std::out_of_range outside that range.
const std::vector<int>& golden_w_prefix(int d);

} // namespace qeuler
