#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

using Word = std::vector<int>;

/// A word of distinct positive integers. Canonical when the entries are
/// exactly {1, ..., n}.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument on repeated or non-positive entries.
    explicit Permutation(Word word);

    static Permutation identity(int n);

    /// Accepts "839562147" (digit string, entries 1..9) or "10,2,1,..."
    static Permutation parse(std::string_view text);

    /// Digit string when every entry is a single digit, comma-separated otherwise.
    std::string to_string() const;

    const Word& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }

    bool is_canonical() const;
    bool is_identity() const;
    bool starts_with_one() const { return !word_.empty() && word_.front() == 1; }
    bool ends_with_one() const { return !word_.empty() && word_.back() == 1; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    Word word_;
};

std::string render_word(std::span<const int> word);

/// Sequential pieces produced by splitting a word around its minimum.
struct SplitDecomposition {
    std::vector<Word> pieces;
    std::size_t min_index = 0; ///< index in `pieces` of the singleton minimum
};

struct PermStats {
    int length = 0;
    int descents = 0;
    int weight = 0;
    int disparity = 0;
};

struct WeightOptions {
    /// Use w(1.pi) = w(pi) + des(pi) instead of recursing on the same-length word.
    bool leading_one_shortcut = false;
    /// Memoize on the flattened word (thread-local cache).
    bool memoize = true;
};

int descents(std::span<const int> word);
inline int descents(const Permutation& p) { return descents(p.word()); }

/// Throws std::invalid_argument("empty permutation") on empty input.
SplitDecomposition split(std::span<const int> word);
inline SplitDecomposition split(const Permutation& p) { return split(p.word()); }

/// Order-isomorphic relabeling onto {1, ..., len}. Throws on duplicates.
Permutation flatten(std::span<const int> word);

/// Recursive weight. Non-canonical input is flattened first.
int weight(const Permutation& p, WeightOptions options = {});
int weight(std::span<const int> word, WeightOptions options = {});

/// Maximum weight d(n-d-1) of a length-n permutation with d descents.
/// Throws std::domain_error unless 0 <= d <= n-1.
int maxwt(int n, int d);

int disparity(const Permutation& p);

PermStats stats(const Permutation& p);

/// pi_L 1 pi_R  ->  pi_R (n+1) pi_L 1
Permutation bij_f(const Permutation& p);

/// alpha_L (n+1) alpha_R 1  ->  alpha_R 1 alpha_L. Throws unless p ends in 1.
Permutation bij_g(const Permutation& p);

/// One recursion node of the weight computation.
struct TraceStep {
    int depth = 0;
    Word word;      ///< flattened word whose weight is being computed
    Word completed; ///< word with n+1 appended
    SplitDecomposition split;
    std::vector<int> piece_descents;
    std::vector<int> piece_weights;
    int weight = 0;
};

/// Pre-order list of the non-trivial nodes visited by the literal recursion.
std::vector<TraceStep> weight_trace(const Permutation& p);

} // namespace qeuler
