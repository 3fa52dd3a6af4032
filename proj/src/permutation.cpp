#include "qeuler/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qeuler {

namespace {

// Words longer than this bypass the memo; the n! top-level words of an
// enumeration are never looked up twice.
constexpr int kMemoMaxLength = 8;

bool all_distinct_positive(const Word& w)
{
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 1)
        return false;
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Word flatten_word(std::span<const int> word)
{
    Word sorted(word.begin(), word.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("flatten: duplicate entries");
    Word out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) - sorted.begin()) + 1;
    return out;
}

bool is_ascending(std::span<const int> w)
{
    return std::is_sorted(w.begin(), w.end());
}

std::string memo_key(const Word& w)
{
    std::string key(w.size(), '\0');
    for (std::size_t i = 0; i < w.size(); ++i)
        key[i] = static_cast<char>(w[i]);
    return key;
}

std::unordered_map<std::string, int>& weight_memo()
{
    thread_local std::unordered_map<std::string, int> memo;
    return memo;
}

// `w` is canonical.
int weight_canonical(const Word& w, const WeightOptions& options)
{
    const int n = static_cast<int>(w.size());
    if (n <= 1 || is_ascending(w))
        return 0;

    if (options.leading_one_shortcut && w.front() == 1) {
        Word rest(w.begin() + 1, w.end());
        for (int& v : rest)
            --v;
        return weight_canonical(rest, options) + descents(rest);
    }

    const bool use_memo = options.memoize && n <= kMemoMaxLength;
    std::string key;
    if (use_memo) {
        key = memo_key(w);
        auto& memo = weight_memo();
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }

    Word completed = w;
    completed.push_back(n + 1);
    const SplitDecomposition sd = split(completed);
    int total = 0;
    for (const Word& piece : sd.pieces)
        total += descents(piece) + weight_canonical(flatten_word(piece), options);

    if (use_memo)
        weight_memo().emplace(std::move(key), total);
    return total;
}

int trace_canonical(const Word& w, int depth, std::vector<TraceStep>& out)
{
    const int n = static_cast<int>(w.size());
    if (n <= 1 || is_ascending(w))
        return 0;

    const std::size_t slot = out.size();
    out.emplace_back();
    TraceStep step;
    step.depth = depth;
    step.word = w;
    step.completed = w;
    step.completed.push_back(n + 1);
    step.split = split(step.completed);
    for (const Word& piece : step.split.pieces) {
        step.piece_descents.push_back(descents(piece));
        step.piece_weights.push_back(trace_canonical(flatten_word(piece), depth + 1, out));
        step.weight += step.piece_descents.back() + step.piece_weights.back();
    }
    const int result = step.weight;
    out[slot] = std::move(step);
    return result;
}

} // namespace

Permutation::Permutation(Word word)
    : word_(std::move(word))
{
    if (!all_distinct_positive(word_))
        throw std::invalid_argument("permutation entries must be distinct positive integers");
}

Permutation Permutation::identity(int n)
{
    Word w(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    Word w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view field = text.substr(pos, end - pos);
            while (!field.empty() && field.front() == ' ')
                field.remove_prefix(1);
            while (!field.empty() && field.back() == ' ')
                field.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw std::invalid_argument("cannot parse permutation entry '" + std::string(field) + "'");
            w.push_back(value);
            pos = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("cannot parse permutation character '") + c + "'");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::string render_word(std::span<const int> word)
{
    const bool digits = std::all_of(word.begin(), word.end(), [](int v) { return v >= 1 && v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!digits && i > 0)
            out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

std::string Permutation::to_string() const
{
    return render_word(word_);
}

bool Permutation::is_canonical() const
{
    return std::all_of(word_.begin(), word_.end(), [n = size()](int v) { return v <= n; });
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

int descents(std::span<const int> word)
{
    int count = 0;
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i - 1] > word[i])
            ++count;
    return count;
}

SplitDecomposition split(std::span<const int> word)
{
    if (word.empty())
        throw std::invalid_argument("empty permutation");

    SplitDecomposition out;
    const auto min_it = std::min_element(word.begin(), word.end());
    const auto min_pos = static_cast<std::size_t>(min_it - word.begin());

    // Left part: cut after the maximum of whatever remains, repeatedly.
    std::size_t start = 0;
    while (start < min_pos) {
        const auto max_it = std::max_element(word.begin() + start, word.begin() + min_pos);
        const auto cut = static_cast<std::size_t>(max_it - word.begin()) + 1;
        out.pieces.emplace_back(word.begin() + start, word.begin() + cut);
        start = cut;
    }
    out.min_index = out.pieces.size();
    out.pieces.push_back(Word{*min_it});
    if (min_pos + 1 < word.size())
        out.pieces.emplace_back(word.begin() + min_pos + 1, word.end());
    return out;
}

Permutation flatten(std::span<const int> word)
{
    return Permutation(flatten_word(word));
}

int weight(std::span<const int> word, WeightOptions options)
{
    return weight_canonical(flatten_word(word), options);
}

int weight(const Permutation& p, WeightOptions options)
{
    if (p.is_canonical())
        return weight_canonical(p.word(), options);
    return weight(std::span<const int>(p.word()), options);
}

int maxwt(int n, int d)
{
    if (d < 0 || d > n - 1)
        throw std::domain_error("maxwt: descent count " + std::to_string(d) + " out of range for n = " + std::to_string(n));
    return d * (n - d - 1);
}

int disparity(const Permutation& p)
{
    const Permutation canon = p.is_canonical() ? p : flatten(p.word());
    return maxwt(canon.size(), descents(canon)) - weight(canon);
}

PermStats stats(const Permutation& p)
{
    PermStats s;
    s.length = p.size();
    s.descents = descents(p);
    s.weight = weight(p);
    s.disparity = p.empty() ? 0 : maxwt(s.length, s.descents) - s.weight;
    return s;
}

Permutation bij_f(const Permutation& p)
{
    if (p.empty() || !p.is_canonical())
        throw std::invalid_argument("bij_f: expected a canonical nonempty permutation");
    const Word& w = p.word();
    const auto one = std::find(w.begin(), w.end(), 1);
    Word out(one + 1, w.end());
    out.push_back(p.size() + 1);
    out.insert(out.end(), w.begin(), one);
    out.push_back(1);
    return Permutation(std::move(out));
}

Permutation bij_g(const Permutation& p)
{
    if (!p.ends_with_one() || !p.is_canonical())
        throw std::invalid_argument("not in S'");
    if (p.size() == 1)
        return Permutation{};
    const Word& w = p.word();
    const auto body_end = w.end() - 1;
    const auto top_it = std::find(w.begin(), body_end, p.size());
    Word out(top_it + 1, body_end);
    out.push_back(1);
    out.insert(out.end(), w.begin(), top_it);
    return Permutation(std::move(out));
}

std::vector<TraceStep> weight_trace(const Permutation& p)
{
    std::vector<TraceStep> out;
    trace_canonical(flatten_word(p.word()), 0, out);
    return out;
}

} // namespace qeuler
