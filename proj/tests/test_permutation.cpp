#include "oracle.hpp"

#include "qeuler/permutation.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <thread>

using namespace qeuler;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Word> pieces_of(const char* s) { return split(P(s)).pieces; }

template <class F>
void for_each_perm(int n, F f)
{
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        f(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

} // namespace

TEST_CASE("parse and render")
{
    CHECK(P("839562147").word() == Word{8, 3, 9, 5, 6, 2, 1, 4, 7});
    CHECK(P("10,2,1").word() == Word{10, 2, 1});
    CHECK(P(" 3, 1 ,2 ").word() == Word{3, 1, 2});
    CHECK(P("839562147").to_string() == "839562147");
    CHECK(Permutation(Word{10, 2, 1}).to_string() == "10,2,1");
    CHECK(P("3,1,2").to_string() == "312");
    CHECK(P("").empty());
    CHECK_THROWS_AS(P("1a"), std::invalid_argument);
    CHECK_THROWS_AS(P("0"), std::invalid_argument);
    CHECK_THROWS_AS(P("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(P("121"), std::invalid_argument);
}

TEST_CASE("descents")
{
    CHECK(descents(P("123")) == 0);
    CHECK(descents(P("5461327")) == 3);
    CHECK(descents(P("21")) == 1);
    CHECK(descents(Permutation{}) == 0);
    CHECK(descents(P("1")) == 0);
}

TEST_CASE("split")
{
    CHECK(pieces_of("839562147") == std::vector<Word>{{8, 3, 9}, {5, 6}, {2}, {1}, {4, 7}});
    CHECK(split(P("839562147")).min_index == 3);
    CHECK(pieces_of("123") == std::vector<Word>{{1}, {2, 3}});
    CHECK(pieces_of("312") == std::vector<Word>{{3}, {1}, {2}});
    CHECK(pieces_of("21") == std::vector<Word>{{2}, {1}});
    CHECK_THROWS_WITH_AS(split(Permutation{}), "empty permutation", std::invalid_argument);
}

TEST_CASE("split invariants hold on every permutation up to length 8")
{
    for (int n = 1; n <= 8; ++n) {
        for_each_perm(n, [&](const Permutation& p) {
            const auto sd = split(p);
            Word joined;
            for (const auto& piece : sd.pieces)
                joined.insert(joined.end(), piece.begin(), piece.end());
            REQUIRE(joined == p.word());
            REQUIRE(sd.pieces[sd.min_index] == Word{1});
            REQUIRE(sd.pieces.size() - sd.min_index <= 2);
            // Each left piece ends at the maximum of what remained of the left part.
            std::size_t offset = 0;
            for (std::size_t i = 0; i < sd.min_index; ++i) {
                offset += sd.pieces[i].size();
                const int last = sd.pieces[i].back();
                for (std::size_t j = offset; j < static_cast<std::size_t>(p.size()) && p[j] != 1; ++j)
                    REQUIRE(p[j] < last);
            }
        });
    }
}

TEST_CASE("flatten")
{
    CHECK(flatten(Word{6, 5, 9, 2, 4, 3, 10}) == P("5461327"));
    CHECK(flatten(Word{4, 2}) == P("21"));
    CHECK(flatten(Word{7, 3, 5}) == P("312"));
    CHECK_THROWS_AS(flatten(Word{3, 3}), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Word w(1 + trial % 12);
        std::iota(w.begin(), w.end(), 1);
        std::shuffle(w.begin(), w.end(), rng);
        const Permutation p(w);
        CHECK(flatten(p.word()) == p);
        CHECK(flatten(p.word()).word() == oracle::rank_relabel(w));
    }
}

TEST_CASE("weight: worked examples")
{
    CHECK(weight(P("781659243")) == 5);
    CHECK(weight(P("5461327")) == 2);
    CHECK(weight(Permutation::identity(9)) == 0);
    CHECK(weight(Permutation{}) == 0);
    CHECK(weight(P("1")) == 0);
}

TEST_CASE("weight: 132 is the unique weight-1 permutation of S_3")
{
    // Oracle first: enumerate S_3 with the reference weight.
    std::vector<Permutation> weight_one;
    for_each_perm(3, [&](const Permutation& p) {
        if (oracle::weight(p.word()) == 1)
            weight_one.push_back(p);
    });
    REQUIRE(weight_one.size() == 1);
    REQUIRE(weight_one.front() == P("132"));
    REQUIRE(descents(weight_one.front()) == 1);

    CHECK(weight(P("132")) == 1);
    CHECK(weight(P("213")) == 0);
}

TEST_CASE("weight agrees with the reference implementation for n <= 8")
{
    for (int n = 0; n <= 8; ++n)
        for_each_perm(n, [&](const Permutation& p) { REQUIRE(weight(p) == oracle::weight(p.word())); });
}

TEST_CASE("weight: literal recursion equals the leading-one shortcut for n <= 8")
{
    const WeightOptions literal{false, false};
    const WeightOptions shortcut{true, false};
    for (int n = 0; n <= 8; ++n)
        for_each_perm(n, [&](const Permutation& p) { REQUIRE(weight(p, literal) == weight(p, shortcut)); });
}

TEST_CASE("weight of non-canonical words is the weight of the flattened word")
{
    CHECK(weight(Permutation(Word{6, 5, 9, 2, 4, 3, 10})) == 2);
    CHECK(weight(Permutation(Word{70, 80})) == 0);
}

TEST_CASE("maxwt")
{
    CHECK(maxwt(5, 2) == 4);
    CHECK(maxwt(6, 0) == 0);
    CHECK(maxwt(7, 3) == 9);
    CHECK_THROWS_AS(maxwt(4, 4), std::domain_error);
    CHECK_THROWS_AS(maxwt(4, -1), std::domain_error);
}

TEST_CASE("weight bounds and attainment for n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> best(n, -1);
        for_each_perm(n, [&](const Permutation& p) {
            const int d = descents(p);
            const int w = weight(p);
            REQUIRE(w >= 0);
            REQUIRE(w <= maxwt(n, d));
            best[d] = std::max(best[d], w);
        });
        for (int d = 0; d < n; ++d)
            CHECK(best[d] == maxwt(n, d));
    }
}

TEST_CASE("disparity")
{
    CHECK(disparity(P("132")) == 0);
    CHECK(disparity(P("213")) == 1);
    CHECK(disparity(Permutation::identity(6)) == 0);

    const auto s = stats(P("781659243"));
    CHECK(s.length == 9);
    CHECK(s.descents == 4);
    CHECK(s.weight == 5);
    CHECK(s.disparity == maxwt(9, 4) - 5);
}

TEST_CASE("disparity lower bound when the first entry is not 1, n <= 9")
{
    for (int n = 1; n <= 9; ++n) {
        for_each_perm(n, [&](const Permutation& p) {
            if (p.starts_with_one())
                return;
            const int d = descents(p);
            REQUIRE(disparity(p) >= n - d - 1);
        });
    }
}

TEST_CASE("maximum weight among permutations ending in 1, n <= 9")
{
    for (int n = 2; n <= 9; ++n) {
        std::vector<int> best(n, -1);
        for_each_perm(n, [&](const Permutation& p) {
            if (p.ends_with_one())
                best[descents(p)] = std::max(best[descents(p)], weight(p));
        });
        for (int d = 1; d <= n - 1; ++d)
            CHECK(best[d] == (d - 1) * (n - d - 1));
    }
}

TEST_CASE("bijection f/g examples")
{
    CHECK(bij_f(P("213")) == P("3421"));
    CHECK(bij_f(P("123")) == P("2341"));
    CHECK(bij_g(P("3421")) == P("213"));
    CHECK(bij_g(P("2341")) == P("123"));
    CHECK(bij_g(P("21")) == P("1"));
    CHECK(bij_g(P("1")).empty());
    CHECK_THROWS_WITH_AS(bij_g(P("312")), "not in S'", std::invalid_argument);
}

TEST_CASE("bijection f: weight kept, one more descent, inverse g, onto S' for n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        std::set<Word> images;
        for_each_perm(n, [&](const Permutation& p) {
            const Permutation f = bij_f(p);
            REQUIRE(f.size() == n + 1);
            REQUIRE(f.ends_with_one());
            REQUIRE(weight(f) == weight(p));
            REQUIRE(descents(f) == descents(p) + 1);
            REQUIRE(bij_g(f) == p);
            images.insert(f.word());
        });
        Word tail(n);
        std::iota(tail.begin(), tail.end(), 2);
        std::size_t s_prime = 0;
        do {
            Word full = tail;
            full.push_back(1);
            REQUIRE(images.count(full) == 1);
            ++s_prime;
        } while (std::next_permutation(tail.begin(), tail.end()));
        CHECK(images.size() == s_prime);
    }
}

TEST_CASE("weight trace mirrors the recursion")
{
    const auto trace = weight_trace(P("781659243"));
    REQUIRE(!trace.empty());
    CHECK(trace.front().depth == 0);
    CHECK(trace.front().weight == 5);
    CHECK(trace.front().split.pieces == std::vector<Word>{{7, 8}, {1}, {6, 5, 9, 2, 4, 3, 10}});
    CHECK(trace.front().piece_descents == std::vector<int>{0, 0, 3});
    CHECK(trace.front().piece_weights == std::vector<int>{0, 0, 2});
    CHECK(trace[1].word == Word{5, 4, 6, 1, 3, 2, 7});
    CHECK(weight_trace(Permutation::identity(4)).empty());
}

TEST_CASE("weight is safe to compute from several threads")
{
    std::vector<int> expected;
    Word w(8);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> words;
    std::mt19937 rng(3);
    for (int i = 0; i < 400; ++i) {
        std::shuffle(w.begin(), w.end(), rng);
        words.push_back(w);
        expected.push_back(oracle::weight(w));
    }
    std::vector<int> got(words.size());
    {
        std::vector<std::jthread> threads;
        for (int t = 0; t < 4; ++t)
            threads.emplace_back([&, t] {
                for (std::size_t i = t; i < words.size(); i += 4)
                    got[i] = weight(std::span<const int>(words[i]));
            });
    }
    CHECK(got == expected);
}
