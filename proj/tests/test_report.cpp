#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cce/errors.hpp"
#include "cce/report.hpp"

using namespace cce;

namespace {

VerificationReport sample(const std::string& name, int checked, std::initializer_list<int> bad, int ms) {
    VerificationReport r(name);
    r.instances_checked = static_cast<std::uint64_t>(checked);
    for (int k : bad) r.add_violation(Digraph(k), "case " + std::to_string(k));
    r.elapsed = std::chrono::milliseconds(ms);
    return r;
}

bool same(const VerificationReport& a, const VerificationReport& b) {
    if (a.property != b.property || a.instances_checked != b.instances_checked ||
        a.violation_total != b.violation_total || a.elapsed != b.elapsed ||
        a.violations.size() != b.violations.size())
        return false;
    for (std::size_t i = 0; i < a.violations.size(); ++i)
        if (a.violations[i].detail != b.violations[i].detail ||
            !(a.violations[i].digraph == b.violations[i].digraph))
            return false;
    return true;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("pass iff no violations") {
    VerificationReport r("p");
    CHECK(r.passed());
    r.add_violation(Digraph(1), "x");
    CHECK_FALSE(r.passed());
    CHECK(r.violation_total == 1);
}

TEST_CASE("merge is associative and commutative") {
    const auto a = sample("p", 3, {2, 5}, 10);
    const auto b = sample("p", 4, {1}, 30);
    const auto c = sample("p", 5, {}, 20);
    CHECK(same(merge(a, b), merge(b, a)));
    CHECK(same(merge(merge(a, b), c), merge(a, merge(b, c))));
    const auto all = merge(merge(a, b), c);
    CHECK(all.instances_checked == 12);
    CHECK(all.violation_total == 3);
    CHECK(all.elapsed == std::chrono::milliseconds(30));
    CHECK(same(merge(VerificationReport(), a), a));
    CHECK_THROWS_AS(merge(a, sample("q", 1, {}, 1)), BadParameters);
}

TEST_CASE("stored violations are capped but counted") {
    VerificationReport r("p");
    for (int k = 0; k < 200; ++k) r.add_violation(Digraph(k % 7), "v" + std::to_string(1000 + k));
    CHECK(r.violation_total == 200);
    CHECK(r.violations.size() == VerificationReport::kStoredViolations);
    CHECK(r.violations.front().detail == "v1000");
    VerificationReport s("p");
    for (int k = 199; k >= 0; --k) s.add_violation(Digraph(k % 7), "v" + std::to_string(1000 + k));
    CHECK(same(r, s));  // insertion order does not matter
}

TEST_CASE("text line") {
    auto r = sample("structure-props", 7, {}, 0);
    r.elapsed = std::chrono::microseconds(1500);
    CHECK(format_report_line(r) ==
          "property=structure-props checked=7 violations=0 elapsed_ms=1.500 result=pass");
    r.add_violation(Digraph(1), "bad");
    CHECK(format_report_line(r).find("violations=1") != std::string::npos);
    CHECK(format_report_line(r).ends_with("result=fail"));
}

TEST_CASE("json document") {
    const std::vector<VerificationReport> reports{sample("a", 2, {3}, 4), sample("b", 5, {}, 1)};
    const auto doc = nlohmann::json::parse(report_json(reports));
    REQUIRE(doc["reports"].size() == 2);
    CHECK(doc["reports"][0]["property"] == "a");
    CHECK(doc["reports"][0]["checked"] == 2);
    CHECK(doc["reports"][0]["violations"] == 1);
    CHECK(doc["reports"][0]["passed"] == false);
    CHECK(doc["reports"][0]["examples"][0]["digraph"] == "digraph 3\n");
    CHECK(doc["reports"][1]["elapsed_ms"] == doctest::Approx(1.0));
}

TEST_CASE("violation files") {
    const auto dir = std::filesystem::temp_directory_path() / "cce-report-test";
    std::filesystem::remove_all(dir);
    const auto r = sample("demo", 1, {2, 4}, 0);
    const auto files = write_violation_files(r, dir);
    REQUIRE(files.size() == 2);
    CHECK(load_digraph(files[0].string()) == Digraph(2));
    std::ifstream in(files[1]);
    std::string header, comment;
    std::getline(in, header);
    std::getline(in, comment);
    CHECK(header == "digraph 4");
    CHECK(comment == "# demo: case 4");
    CHECK(write_violation_files(sample("none", 1, {}, 0), dir).empty());
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
