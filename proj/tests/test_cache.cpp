#include "qeuler/cache.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qeuler;

namespace {

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("qeuler_test_" + name);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(std::string_view text)
{
    try {
        parse_cache(text);
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("save and load round trip")
{
    EulerianTable table;
    en_recur(12, table);
    const auto path = temp_file("roundtrip.txt");
    cache_save(path, table);
    const auto loaded = cache_load(path);
    REQUIRE(loaded.size() == 13);
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(*loaded.get(n) == *table.get(n));
        CHECK(loaded.provenance(n) == Provenance::cache_file);
    }
    const auto first = slurp(path);
    cache_save(path, loaded);
    CHECK(slurp(path) == first);
    CHECK(first.rfind(std::string(kCacheHeader) + "\n", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("record format")
{
    EulerianTable table;
    en_recur(2, table);
    CHECK(serialize_cache(table) == "# qeulerian-cache v1\nE 0 0 0 1\nE 1 0 0 1\nE 2 0 0 1\nE 2 1 0 1\n");
    CHECK(parse_cache("# qeulerian-cache v1\n").size() == 0);
}

TEST_CASE("tampered coefficients are rejected with the offending n")
{
    EulerianTable table;
    en_recur(6, table);
    std::string text = serialize_cache(table);
    const std::string needle = "E 5 1 0 15\n";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, needle.size(), "E 5 1 0 16\n");
    const auto message = error_of(text);
    CHECK(message.find("n = 5") != std::string::npos);
}

TEST_CASE("malformed caches")
{
    CHECK_FALSE(error_of("# other v2\n").empty());
    CHECK_FALSE(error_of("").empty());
    CHECK(error_of("# qeulerian-cache v1\nE 2 1 0 1\nE 2 0 0 1\n").find("out of order") != std::string::npos);
    CHECK(error_of("# qeulerian-cache v1\nE 2 0 0 1\nE 2 0 0 1\n").find("n = 2") != std::string::npos);
    CHECK_FALSE(error_of("# qeulerian-cache v1\nE 2 0 0\n").empty());
    CHECK_FALSE(error_of("# qeulerian-cache v1\nE 2 0 0 -1\n").empty());
    CHECK_FALSE(error_of("# qeulerian-cache v1\nE 1 0 0 0\n").empty());
    CHECK_THROWS_AS(cache_load(temp_file("does_not_exist")), std::runtime_error);
}
