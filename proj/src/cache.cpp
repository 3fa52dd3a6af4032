#include "qeuler/cache.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qeuler {

std::string serialize_cache(const EulerianTable& table)
{
    std::string out(kCacheHeader);
    out += '\n';
    for (const auto& [n, entry] : table.snapshot())
        for (const auto& [key, c] : entry.poly->terms())
            out += "E " + std::to_string(n) + ' ' + std::to_string(key.first) + ' ' + std::to_string(key.second) + ' '
                   + c.str() + '\n';
    return out;
}

EulerianTable parse_cache(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader)
        throw std::runtime_error("cache: missing or unsupported header (expected '" + std::string(kCacheHeader) + "')");

    std::map<int, BivariatePolynomial> polys;
    std::tuple<int, int, int> last{-1, -1, -1};
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string tag, coeff, extra;
        int n = -1, d = -1, m = -1;
        if (!(fields >> tag >> n >> d >> m >> coeff) || (fields >> extra) || tag != "E" || n < 0 || d < 0 || m < 0
            || coeff.find_first_not_of("0123456789") != std::string::npos) {
            throw std::runtime_error("cache: malformed record on line " + std::to_string(line_no)
                                     + (n >= 0 ? " (n = " + std::to_string(n) + ")" : ""));
        }
        const std::tuple<int, int, int> key{n, d, m};
        if (key <= last)
            throw std::runtime_error("cache: records out of order or repeated for n = " + std::to_string(n) + " on line "
                                     + std::to_string(line_no));
        last = key;
        const BigInt c(coeff);
        if (c == 0)
            throw std::runtime_error("cache: zero coefficient stored for n = " + std::to_string(n));
        polys[n].add_term(d, m, c);
    }

    EulerianTable table;
    for (auto& [n, poly] : polys) {
        if (auto problem = validate_en(n, poly))
            throw std::runtime_error("cache: invalid E_" + std::to_string(n) + " (n = " + std::to_string(n) + "): " + *problem);
        table.insert(n, std::move(poly), Provenance::cache_file);
    }
    return table;
}

void cache_save(const std::filesystem::path& path, const EulerianTable& table)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cache: cannot write " + path.string());
    out << serialize_cache(table);
    if (!out)
        throw std::runtime_error("cache: write failed for " + path.string());
}

EulerianTable cache_load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cache: cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_cache(buffer.str());
}

} // namespace qeuler
