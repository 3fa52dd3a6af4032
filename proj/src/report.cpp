#include "qeuler/report.hpp"

#include <algorithm>
#include <tuple>

namespace qeuler {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    }
    return "unknown";
}

Status VerificationReport::status() const
{
    if (error)
        return Status::error;
    return violations.empty() ? Status::pass : Status::fail;
}

void VerificationReport::normalize()
{
    auto key = [](const Violation& v) {
        constexpr std::int64_t none = INT64_MIN;
        return std::tuple(v.n.value_or(none), v.d.value_or(none), v.m.value_or(none));
    };
    std::stable_sort(violations.begin(), violations.end(),
                     [&](const Violation& a, const Violation& b) { return key(a) < key(b); });
}

void VerificationReport::merge(const VerificationReport& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    checked += other.checked;
    if (other.error && !error)
        error = other.error;
    normalize();
}

namespace {

std::string opt(const std::optional<std::int64_t>& v)
{
    return v ? std::to_string(*v) : std::string();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string VerificationReport::render_text() const
{
    std::string out = check + " [" + range + "]: " + to_string(status());
    if (severity == Severity::conjecture)
        out += " (conjecture)";
    out += ", " + std::to_string(checked) + " checks";
    if (!violations.empty())
        out += ", " + std::to_string(violations.size()) + " violations";
    out += '\n';
    if (error)
        out += "  error: " + *error + '\n';
    for (const auto& v : violations) {
        out += "  violation";
        if (v.n)
            out += " n=" + opt(v.n);
        if (v.d)
            out += " d=" + opt(v.d);
        if (v.m)
            out += " m=" + opt(v.m);
        out += ": expected " + v.expected + ", actual " + v.actual;
        if (!v.note.empty())
            out += " (" + v.note + ")";
        out += '\n';
    }
    for (const auto& note : notes)
        out += "  note: " + note + '\n';
    return out;
}

std::string VerificationReport::render_csv(bool header) const
{
    std::string out = header ? "check,n,d,m,expected,actual,status\n" : "";
    const std::string status_text = to_string(status());
    if (violations.empty()) {
        out += csv_field(check) + ",,,,,," + status_text + '\n';
        return out;
    }
    for (const auto& v : violations)
        out += csv_field(check) + ',' + opt(v.n) + ',' + opt(v.d) + ',' + opt(v.m) + ',' + csv_field(v.expected) + ','
               + csv_field(v.actual) + ',' + status_text + '\n';
    return out;
}

} // namespace qeuler
