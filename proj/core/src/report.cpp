#include "cce/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cce/errors.hpp"

namespace cce {

namespace {

bool violation_less(const Violation& a, const Violation& b) {
    if (a.detail != b.detail) return a.detail < b.detail;
    if (a.digraph.order() != b.digraph.order()) return a.digraph.order() < b.digraph.order();
    return a.digraph.arcs() < b.digraph.arcs();
}

std::string fixed_ms(double ms) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << ms;
    return out.str();
}

}  // namespace

void VerificationReport::add_violation(const Digraph& d, std::string detail) {
    ++violation_total;
    Violation v{d, std::move(detail)};
    auto pos = std::lower_bound(violations.begin(), violations.end(), v, violation_less);
    if (violations.size() < kStoredViolations) {
        violations.insert(pos, std::move(v));
    } else if (pos != violations.end()) {
        violations.insert(pos, std::move(v));
        violations.pop_back();
    }
}

void VerificationReport::absorb(const VerificationReport& other) { *this = merge(*this, other); }

double VerificationReport::elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(elapsed).count();
}

VerificationReport merge(const VerificationReport& a, const VerificationReport& b) {
    if (!a.property.empty() && !b.property.empty() && a.property != b.property)
        throw BadParameters("cannot merge reports for '" + a.property + "' and '" + b.property +
                            "'");
    VerificationReport out(a.property.empty() ? b.property : a.property);
    out.instances_checked = a.instances_checked + b.instances_checked;
    out.violation_total = a.violation_total + b.violation_total;
    out.elapsed = std::max(a.elapsed, b.elapsed);
    out.violations.reserve(a.violations.size() + b.violations.size());
    std::merge(a.violations.begin(), a.violations.end(), b.violations.begin(),
               b.violations.end(), std::back_inserter(out.violations), violation_less);
    if (out.violations.size() > VerificationReport::kStoredViolations)
        out.violations.resize(VerificationReport::kStoredViolations);
    return out;
}

std::string format_report_line(const VerificationReport& report) {
    return "property=" + report.property + " checked=" + std::to_string(report.instances_checked) +
           " violations=" + std::to_string(report.violation_total) +
           " elapsed_ms=" + fixed_ms(report.elapsed_ms()) +
           " result=" + (report.passed() ? "pass" : "fail");
}

void write_report_line(std::ostream& out, const VerificationReport& report) {
    out << format_report_line(report) << '\n';
}

std::string report_json(std::span<const VerificationReport> reports) {
    nlohmann::ordered_json doc;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::ordered_json entry;
        entry["property"] = r.property;
        entry["checked"] = r.instances_checked;
        entry["violations"] = r.violation_total;
        entry["elapsed_ms"] = r.elapsed_ms();
        entry["passed"] = r.passed();
        entry["examples"] = nlohmann::ordered_json::array();
        for (const Violation& v : r.violations)
            entry["examples"].push_back({{"detail", v.detail}, {"digraph", format_digraph(v.digraph)}});
        doc["reports"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

void write_report_json(std::ostream& out, std::span<const VerificationReport> reports) {
    out << report_json(reports) << '\n';
}

std::vector<std::filesystem::path> write_violation_files(const VerificationReport& report,
                                                         const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    if (report.violations.empty()) return written;
    std::filesystem::create_directories(dir);
    const std::string stem = report.property.empty() ? "violation" : report.property;
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
        const Violation& v = report.violations[k];
        const auto path = dir / (stem + "-" + std::to_string(k + 1) + ".dg");
        std::ofstream file(path);
        if (!file) throw Error("cannot write " + path.string());
        const std::string comment = report.property + ": " + v.detail;
        write_digraph(file, v.digraph, std::span<const std::string>(&comment, 1));
        written.push_back(path);
    }
    return written;
}

}  // namespace cce
