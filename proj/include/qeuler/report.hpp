#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qeuler {

enum class Status { pass, fail, error };
enum class Severity { hard, conjecture };

std::string to_string(Status s);

/// Coordinates are the (n, d, m) cell of the failing check. Checks indexed
/// differently document their mapping onto these three slots.
struct Violation {
    std::optional<std::int64_t> n, d, m;
    std::string expected;
    std::string actual;
    std::string note;
};

struct VerificationReport {
    std::string check;
    std::string range;
    Severity severity = Severity::hard;
    std::vector<Violation> violations;
    std::vector<std::string> notes; ///< informational lines, never affect status
    std::int64_t checked = 0;       ///< number of individual comparisons made
    std::optional<std::string> error;

    Status status() const;
    bool passed() const { return status() == Status::pass; }

    /// Sorts violations by (n, d, m).
    void normalize();

    /// Appends another report's violations, notes, and counts.
    void merge(const VerificationReport& other);

    std::string render_text() const;
    /// Header plus one row per violation, or a single summary row when clean.
    std::string render_csv(bool header = true) const;
};

} // namespace qeuler
