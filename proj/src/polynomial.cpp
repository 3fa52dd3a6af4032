#include "qeuler/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qeuler {

BigInt binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    static std::mutex mutex;
    static std::vector<std::vector<BigInt>> rows{{1}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t i = 1; i + 1 < row.size(); ++i)
            row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// ---------------------------------------------------------------------------

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt UnivariatePolynomial::coeff(int e) const
{
    if (e < 0 || e >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[e];
}

namespace {

void append_monomial(std::string& out, const BigInt& c, char var, int e)
{
    if (e == 0) {
        out += c.str();
        return;
    }
    if (c != 1)
        out += c.str();
    out += var;
    if (e > 1)
        out += '^' + std::to_string(e);
}

} // namespace

std::string UnivariatePolynomial::render(char var, bool descending) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    auto emit = [&](int e) {
        if (coeffs_[e] == 0)
            return;
        if (!out.empty())
            out += '+';
        append_monomial(out, coeffs_[e], var, e);
    };
    if (descending)
        for (int e = degree(); e >= 0; --e)
            emit(e);
    else
        for (int e = 0; e <= degree(); ++e)
            emit(e);
    return out;
}

// ---------------------------------------------------------------------------

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c)
{
    return monomial(0, 0, c);
}

BivariatePolynomial BivariatePolynomial::monomial(int d, int m, const BigInt& c)
{
    BivariatePolynomial p;
    p.add_term(d, m, c);
    return p;
}

void BivariatePolynomial::add_term(int d, int m, const BigInt& c)
{
    if (d < 0 || m < 0)
        throw std::invalid_argument("negative exponent");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(Key{d, m}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other)
{
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    BivariatePolynomial out;
    if (a.is_zero() || b.is_zero())
        return out;

    // Accumulate densely, then sparsify.
    int da = 0, ma = 0, db = 0, mb = 0;
    for (const auto& [key, c] : a.terms_) {
        da = std::max(da, key.first);
        ma = std::max(ma, key.second);
    }
    for (const auto& [key, c] : b.terms_) {
        db = std::max(db, key.first);
        mb = std::max(mb, key.second);
    }
    const int width = ma + mb + 1;
    std::vector<BigInt> acc(static_cast<std::size_t>(da + db + 1) * width);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            acc[static_cast<std::size_t>(ka.first + kb.first) * width + ka.second + kb.second] += ca * cb;
    for (int d = 0; d <= da + db; ++d)
        for (int m = 0; m < width; ++m)
            if (const BigInt& c = acc[static_cast<std::size_t>(d) * width + m]; c != 0)
                out.terms_.emplace_hint(out.terms_.end(), BivariatePolynomial::Key{d, m}, c);
    return out;
}

BivariatePolynomial BivariatePolynomial::scaled(const BigInt& c) const
{
    BivariatePolynomial out;
    if (c == 0)
        return out;
    for (const auto& [key, v] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), key, v * c);
    return out;
}

BivariatePolynomial BivariatePolynomial::substitute_x_qx() const
{
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_)
        out.terms_.emplace(Key{key.first, key.second + key.first}, c);
    return out;
}

BigInt BivariatePolynomial::coeff_xq(int d, int m) const
{
    auto it = terms_.find(Key{d, m});
    return it == terms_.end() ? BigInt(0) : it->second;
}

UnivariatePolynomial BivariatePolynomial::coeff_x(int d) const
{
    std::vector<BigInt> coeffs;
    for (auto it = terms_.lower_bound(Key{d, 0}); it != terms_.end() && it->first.first == d; ++it) {
        if (static_cast<int>(coeffs.size()) <= it->first.second)
            coeffs.resize(it->first.second + 1);
        coeffs[it->first.second] = it->second;
    }
    return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial BivariatePolynomial::eval_q1() const
{
    std::vector<BigInt> coeffs(static_cast<std::size_t>(x_degree() + 1));
    for (const auto& [key, c] : terms_)
        coeffs[key.first] += c;
    return UnivariatePolynomial(std::move(coeffs));
}

BigInt BivariatePolynomial::mass() const
{
    BigInt total = 0;
    for (const auto& [key, c] : terms_)
        total += c;
    return total;
}

int BivariatePolynomial::x_degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

std::string BivariatePolynomial::render() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        const int d = it->first.first;
        auto group_end = it;
        while (group_end != terms_.end() && group_end->first.first == d)
            ++group_end;

        if (d == 0) {
            // No parentheses in the x-free group: plain q-monomials, descending.
            for (auto r = std::make_reverse_iterator(group_end); r != std::make_reverse_iterator(it); ++r) {
                if (!out.empty())
                    out += '+';
                append_monomial(out, r->second, 'q', r->first.second);
            }
        } else {
            if (!out.empty())
                out += '+';
            const bool bare_constant = std::next(it) == group_end && it->first.second == 0;
            if (bare_constant) {
                append_monomial(out, it->second, 'x', d);
            } else {
                append_monomial(out, 1, 'x', d);
                out += '(';
                bool first = true;
                for (auto r = std::make_reverse_iterator(group_end); r != std::make_reverse_iterator(it); ++r) {
                    if (!first)
                        out += '+';
                    first = false;
                    append_monomial(out, r->second, 'q', r->first.second);
                }
                out += ')';
            }
        }
        it = group_end;
    }
    return out;
}

std::string BivariatePolynomial::to_lines() const
{
    std::string out;
    for (const auto& [key, c] : terms_)
        out += std::to_string(key.first) + ' ' + std::to_string(key.second) + ' ' + c.str() + '\n';
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class TextParser {
public:
    TextParser(std::string_view text, bool lenient)
        : text_(text), lenient_(lenient)
    {}

    LenientParse run()
    {
        skip_space();
        if (peek() == '0') {
            // "0" alone is the zero polynomial; "0..." otherwise is a coefficient.
            std::size_t save = pos_;
            ++pos_;
            skip_space();
            if (at_end())
                return {};
            pos_ = save;
        }
        std::set<BivariatePolynomial::Key> seen;
        while (true) {
            skip_space();
            const std::size_t term_start = pos_;
            BivariatePolynomial term = parse_term();
            for (const auto& [key, c] : term.terms()) {
                if (!seen.insert(key).second)
                    anomaly(term_start, "repeated term x^" + std::to_string(key.first) + " q^" + std::to_string(key.second));
            }
            result_.value += term;
            skip_space();
            if (at_end())
                break;
            if (peek() == '+') {
                ++pos_;
                continue;
            }
            anomaly(pos_, "missing '+' before '" + std::string(text_.substr(pos_, 8)) + "'");
        }
        return std::move(result_);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void anomaly(std::size_t offset, std::string message)
    {
        if (!lenient_) {
            pos_ = offset;
            fail(message);
        }
        result_.notes.push_back({offset, std::move(message)});
    }

    bool parse_uint(BigInt& out)
    {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            return false;
        out = BigInt(std::string(text_.substr(start, pos_ - start)));
        return true;
    }

    int parse_exponent()
    {
        skip_space();
        if (peek() != '^')
            return 1;
        ++pos_;
        skip_space();
        const bool braced = peek() == '{';
        if (braced)
            ++pos_;
        BigInt e;
        if (!parse_uint(e))
            fail("expected exponent");
        if (braced) {
            skip_space();
            if (peek() != '}')
                fail("expected '}'");
            ++pos_;
        }
        if (e > 1'000'000)
            fail("exponent too large");
        return e.convert_to<int>();
    }

    // [int] ['q' exp]
    bool parse_q_monomial(BigInt& coeff, int& m)
    {
        coeff = 1;
        m = 0;
        const bool has_coeff = parse_uint(coeff);
        skip_space();
        if (peek() == 'q') {
            ++pos_;
            m = parse_exponent();
            return true;
        }
        return has_coeff;
    }

    std::vector<BigInt> parse_q_group()
    {
        std::vector<BigInt> coeffs;
        std::set<int> seen;
        while (true) {
            skip_space();
            const std::size_t start = pos_;
            BigInt c;
            int m = 0;
            if (!parse_q_monomial(c, m))
                fail("expected q-term");
            if (!seen.insert(m).second)
                anomaly(start, "repeated exponent q^" + std::to_string(m) + " inside parentheses");
            if (static_cast<int>(coeffs.size()) <= m)
                coeffs.resize(m + 1);
            coeffs[m] += c;
            skip_space();
            if (peek() == '+') {
                ++pos_;
                continue;
            }
            if (peek() == ')') {
                ++pos_;
                return coeffs;
            }
            fail("expected '+' or ')'");
        }
    }

    BivariatePolynomial parse_term()
    {
        BigInt c = 1;
        int m = 0;
        const bool has_q_part = parse_q_monomial(c, m);
        skip_space();
        if (peek() != 'x') {
            if (!has_q_part)
                fail("expected term");
            return BivariatePolynomial::monomial(0, m, c);
        }
        ++pos_;
        const int d = parse_exponent();
        skip_space();
        if (peek() != '(')
            return BivariatePolynomial::monomial(d, m, c);
        ++pos_;
        const std::vector<BigInt> group = parse_q_group();
        BivariatePolynomial out;
        for (std::size_t e = 0; e < group.size(); ++e)
            out.add_term(d, m + static_cast<int>(e), group[e] * c);
        return out;
    }

    std::string_view text_;
    bool lenient_;
    std::size_t pos_ = 0;
    LenientParse result_;
};

} // namespace

BivariatePolynomial parse_polynomial(std::string_view text)
{
    return TextParser(text, false).run().value;
}

LenientParse parse_polynomial_lenient(std::string_view text)
{
    return TextParser(text, true).run();
}

BivariatePolynomial parse_lines(std::string_view text)
{
    BivariatePolynomial out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::set<BivariatePolynomial::Key> seen;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        int d = -1, m = -1;
        std::string coeff, extra;
        if (!(fields >> d >> m >> coeff) || (fields >> extra) || d < 0 || m < 0
            || !std::all_of(coeff.begin(), coeff.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw std::invalid_argument("malformed term line '" + line + "'");
        if (!seen.insert({d, m}).second)
            throw std::invalid_argument("repeated term line '" + line + "'");
        out.add_term(d, m, BigInt(coeff));
    }
    return out;
}

} // namespace qeuler
