#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cce/digraph.hpp"

namespace cce {

struct Violation {
    Digraph digraph;
    std::string detail;
};

/// Outcome of checking one property over some instances. `violations` keeps
/// at most kStoredViolations examples; `violation_total` counts all of them,
/// so passed() never depends on the cap.
struct VerificationReport {
    static constexpr std::size_t kStoredViolations = 64;

    std::string property;
    std::uint64_t instances_checked = 0;
    std::vector<Violation> violations;
    std::uint64_t violation_total = 0;
    std::chrono::nanoseconds elapsed{0};

    VerificationReport() = default;
    explicit VerificationReport(std::string name) : property(std::move(name)) {}

    bool passed() const noexcept { return violation_total == 0; }
    void add_violation(const Digraph& d, std::string detail);
    /// Absorbs another report's counts and violations; see merge().
    void absorb(const VerificationReport& other);
    double elapsed_ms() const;
};

/// Counts add, elapsed is the maximum (shards run side by side), violations
/// are the smallest kStoredViolations of the union under a fixed order.
/// Associative and commutative. Reports with different nonempty property
/// names cannot be merged (BadParameters).
VerificationReport merge(const VerificationReport& a, const VerificationReport& b);

/// `property=<name> checked=<n> violations=<n> elapsed_ms=<ms> result=pass|fail`
std::string format_report_line(const VerificationReport& report);
void write_report_line(std::ostream& out, const VerificationReport& report);

/// {"reports":[{"property":..,"checked":..,"violations":..,"elapsed_ms":..,
///   "passed":..,"examples":[{"detail":..,"digraph":..}]}]}
std::string report_json(std::span<const VerificationReport> reports);
void write_report_json(std::ostream& out, std::span<const VerificationReport> reports);

/// Writes each stored violation as `<property>-<k>.dg` (detail as a comment)
/// into dir, creating it if needed. Returns the written paths.
std::vector<std::filesystem::path> write_violation_files(const VerificationReport& report,
                                                         const std::filesystem::path& dir);

}  // namespace cce
