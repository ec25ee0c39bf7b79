#include <doctest.h>

#include <set>
#include <sstream>

#include "fcensus/report.hpp"
#include "fcensus/verify.hpp"

using namespace fcensus;

namespace {

std::map<std::string, std::string> csv_classes(const std::string& csv) {
  std::map<std::string, std::string> out;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "section,key,count,count_eig");
  while (std::getline(in, line)) {
    if (line.rfind("class,", 0) != 0) continue;
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    const auto c = line.find(',', b + 1);
    out[line.substr(a + 1, b - a - 1)] = line.substr(b + 1, c - b - 1);
  }
  return out;
}

}  // namespace

TEST_CASE("json and csv carry the same counts") {
  CensusOptions opt;
  opt.strata = true;
  const CensusReport r = census(2, 2, 2, opt);
  const auto j = report_to_json(r);
  CHECK(j["counts"]["X"] == "88");
  CHECK(j["q"] == "4");
  CHECK(j["schema_version"] == kReportSchemaVersion);
  const auto classes = csv_classes(report_to_csv(r));
  CHECK(classes.size() == 6);
  for (const auto& [name, value] : classes) CHECK(j["counts"][name] == value);

  BigInt total = 0;
  for (const auto& s : j["strata_by_quiver"]) total += BigInt(s["count"].get<std::string>());
  CHECK(total == r.counts.X_diag);
  CHECK(j["strata_by_shape"].size() == r.strata_by_shape.size());
  CHECK_FALSE(report_to_json(census(2, 2, 2)).contains("strata_by_quiver"));
}

TEST_CASE("serialized reports do not depend on the worker count") {
  CensusOptions one;
  one.strata = true;
  CensusOptions many = one;
  many.workers = 4;
  many.chunk_size = 512;
  CHECK(report_to_json(census(3, 2, 2, one)).dump() == report_to_json(census(3, 2, 2, many)).dump());
  CHECK(report_to_csv(census(3, 2, 2, one)) == report_to_csv(census(3, 2, 2, many)));
}

TEST_CASE("check registry") {
  const auto& ids = acceptance_check_ids();
  CHECK(ids.size() == 12);
  std::set<std::string> unique(ids.begin(), ids.end());
  for (const auto& id : diagnostic_check_ids()) unique.insert(id);
  CHECK(unique.size() == ids.size() + diagnostic_check_ids().size());
  CHECK_THROWS_AS(run_check("no-such-check"), Error);
}

TEST_CASE("cheap checks pass and serialize") {
  for (const char* id : {"quiver-maximizers", "shape-maximizers", "diag-subalgebra-count"}) {
    const VerifyOutcome o = run_check(id);
    CHECK(o.status == VerifyStatus::kPass);
    const auto j = to_json(o);
    CHECK(j["id"] == id);
    CHECK(j["status"] == "pass");
    for (const char* key : {"observed", "expected", "tolerance", "elapsed_ms"}) CHECK(j.contains(key));
  }
}

TEST_CASE("negative controls fail their checks") {
  VerifyOptions tampered;
  tampered.tamper_c_inf = true;
  CHECK(run_check("commutative-subalgebra-count", tampered).status == VerifyStatus::kFail);
  CHECK(run_check("commutative-subalgebra-count").status == VerifyStatus::kPass);
  VerifyOptions exact;
  exact.tamper_exact_n2 = true;
  CHECK(run_check("n2-exact-law", exact).status == VerifyStatus::kFail);
}
