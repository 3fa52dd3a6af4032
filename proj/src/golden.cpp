#include "qeuler/golden.hpp"

#include <array>
#include <stdexcept>

namespace qeuler {

namespace {

// Verbatim source text, braces and spacing included.
constexpr std::array<std::string_view, 11> kGoldenText = {
    R"(1)",
    R"(1)",
    R"(1+x)",
    R"(1+x(q+3) + x^2)",
    R"(1+x(q^2+3q+7) + x^2(q^2 + 4q+6) + x^3)",
    R"(1+x(q^3+3q^2+7q+15) + x^2(q^4 + 4q^3+11q^2 + 25q+25) + x^3(q^3 + 5q^2 + 10q + 10) + x^4)",
    R"(1+x(q^4+3q^3+7q^2+15q+31) + x^2(q^6+4q^5+11q^4+31q^3+58q^2 + 107q+90) + x^3(q^6+5q^5+16q^4+34q^3 + 76q^2 + 105q + 65) + x^4(q^4+6q^3+15q^2+20q+15)+x^5)",
    R"(1+x(q^5 +3q^4+7q^3+15q^2+31q+63) + x^2(q^8+4q^7+11q^6+31q^5+65q^4+149q^3+237q^2 + 392q+301) + x^3(q^9 + 5q^8+16q^7+41q^6+104q^5+203q^4+380q^3 + 609q^2 + 707q + 350) + x^4(q^8+6q^7+22q^6+55q^5+106q^4+210q^3+336q^2+315q+140)+x^5(q^5+7q^4+21q^3+35q^2+35q+21) + x^6)",
    R"(1+x(q^6 +3q^5+7q^4+15q^3+31q^2+63q+127) + x^2(q^{10} + 4q^9+11q^8+31q^7+65q^6+157q^5+289q^4+588q^3+855q^2 + 1326q+966) + x^3(q^{12}+5q^{11}+16q^{10}+41q^9 + 112q^8+235q^7+496q^6+969q^5+1654q^4+2760q^3 + 3723q^2 + 3906q + 1701) + x^4(q^{12}+6q^{11}+22q^{10}+63q^9+146q^8+338q^7+664q^6+1231q^5+2030q^4+3110q^3+3906q^2+3052q+1050)+x^5(q^{10}+7q^9+29q^8+83q^7+183q^6+321q^5+575q^4+952q^3+1106q^2+770q+266) + x^6(q^6+8q^5+28q^4+56q^3+70q^2+56q+28)+x^7)",
    R"(1+x(q^7 +3q^6+7q^5+15q^4+31q^3+63q^2+127q+255) + x^2(q^{12}+4q^{11}+11q^{10} + 31q^9+65q^8+157q^7+298q^6+651q^5+1110q^4+2091q^3+2877q^2 + 4827q+3025) + x^3(q^{15}+5q^{14}+16q^{13}+41q^{12}+112q^{11}+244q^{10}+532q^9 + 1104q^8+2077q^7+3825q^6+6762q^5+10545q^4+16179q^3 + 19677q^2 + 19344q + 7770) + x^4(q^{16}+6q^{15}+22q^{14}+63q^{13}+155q^{12}+383q^{11}+808q^{10}+1636q^9+3182q^8+5741q^7+9744q^6+15745q^5+23424q^4+31056q^3+33711q^2+23562q+6951)+x^5(q^{15}+7q^{14}+29q^{13}+92q^{12}+237q^{11}+519q^{10}+1106q^9+2122q^8+3872q^7+6440q^6+10127q^5+14484q^4+18706q^3+17724q^2+10122q+2646) + x^6(q^{12}+8q^{11}+37q^{10}+119q^9+295q^8+587q^7+967q^6+1575q^5+2577q^4+3360q^3+2982q^2+1638q+462)+x^7(q^7+9q^6+36q^5+84q^4+126q^3+126q^2+84q+36)+x^8)",
    R"(1+x(q^8 +3q^6+7q^6+15q^5+31q^4+63q^3+127q^2+255q+511) + x^2(q^{14}+4q^{13}+11q^{12}+31q^{11}+65q^{10} + 157q^9+298q^8+661q^7+1185q^6+2416q^5+3912q^4+6994q^3+9286q^2 + 13489q+9338) + x^3(q^{18}+5q^{17}+16q^{16}+41q^{15}+112q^{14}+244q^{13}+542q^{12}+1144q^{11}+2232q^{10}+4315q^9 + 8827q^8+13998q^7+24825q^6+39693q^5+58044q^4+83805q^3 + 95256q^2 + 89595q + 34105) + x^4(q^{20}+6q^{19}+22q^{18}+63q^{17}+155q^{16}+393q^{15}+858q^{14}+1796q^{13}+3637q^{12}+7086q^{11}+12859q^{10}+22970q^9+39939q^8+64528q^7+101580q^6+150402q^5+206718q^4+249396q^3+245880q^2+159540q+42525)+x^5(q^{20}+7q^{19}+20q^{18}+92q^{17}+247q^{16}+579q^{15}+1326q^{14}+2752q^{13}+5422q^{12}+10315q^{11}+18597q^{10}+32074q^9+52962q^8+82817q^7+124572q^6+175510q^5+222990q^4+247500q^3+205995q^2+103740q+22827) + x^6(q^{18}+8q^{17}+37q^{16}+129q^{15}+365q^{14}+877q^{13}+1842q^{12}+3675q^{11}+6822q^{10}+12140q^9+20107q^8+31745q^7+46985q^6+64622q^5+82365q^4+86452q^3+63126q^2+28014q+5880) x^7(q^{14}+9q^{13}+46q^{12}+164q^{11}+461q^{10}+1001q^9+1849q^8+2891q^7+4366q^6+6855q^5+9507q^4+9828q^3+6972q^2+3150q+750)+x^8(q^8+10q^7+45q^6+120q^5+210q^4+252q^3+210q^2+120q+45)+x^9)",
};

} // namespace

GoldenPolynomial golden_en(int n)
{
    if (n < 0 || n >= static_cast<int>(kGoldenText.size()))
        throw std::out_of_range("golden data covers 0 <= n <= 10, got " + std::to_string(n));
    GoldenPolynomial g;
    g.n = n;
    g.text = kGoldenText[n];
    g.authoritative = n <= 7;
    auto parsed = parse_polynomial_lenient(g.text);
    g.value = std::move(parsed.value);
    g.notes = std::move(parsed.notes);
    return g;
}

std::vector<TermDiff> diff_terms(const BivariatePolynomial& computed, const BivariatePolynomial& transcribed)
{
    std::vector<TermDiff> out;
    auto a = computed.terms().begin();
    auto b = transcribed.terms().begin();
    const auto a_end = computed.terms().end();
    const auto b_end = transcribed.terms().end();
    while (a != a_end || b != b_end) {
        if (b == b_end || (a != a_end && a->first < b->first)) {
            out.push_back({a->first.first, a->first.second, a->second, 0});
            ++a;
        } else if (a == a_end || b->first < a->first) {
            out.push_back({b->first.first, b->first.second, 0, b->second});
            ++b;
        } else {
            if (a->second != b->second)
                out.push_back({a->first.first, a->first.second, a->second, b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

const std::vector<int>& golden_w_prefix(int d)
{
    static const std::vector<std::vector<int>> series = {
        {1, 3, 7, 15, 31, 63},
        {1, 4, 11, 31, 65, 157},
        {1, 5, 16, 41, 112, 244},
        {1, 6, 22, 63, 155, 393},
        {1, 7, 29, 92, 247, 590},
    };
    if (d < 1 || d > static_cast<int>(series.size()))
        throw std::out_of_range("published W_d prefixes cover 1 <= d <= 5");
    return series[d - 1];
}

} // namespace qeuler
