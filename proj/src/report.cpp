#include "fcensus/report.hpp"

#include <sstream>

namespace fcensus {

namespace {

std::string shape_key(const JordanShape& s) {
  nlohmann::json j = s.parts();
  return j.dump();
}

}  // namespace

nlohmann::ordered_json report_to_json(const CensusReport& report) {
  nlohmann::ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["p"] = report.p;
  out["e"] = report.e;
  out["n"] = report.n;
  out["q"] = report.q.str();
  nlohmann::ordered_json counts;
  counts["X"] = report.counts.X.str();
  counts["X_diag"] = report.counts.X_diag.str();
  counts["X_inf"] = report.counts.X_inf.str();
  counts["X_inf_diag"] = report.counts.X_inf_diag.str();
  counts["X_eig_fp"] = report.counts.X_eig_fp.str();
  counts["total"] = report.counts.total.str();
  out["counts"] = std::move(counts);
  if (report.has_strata) {
    auto quivers = nlohmann::ordered_json::array();
    for (const auto& [q, count] : report.strata_by_quiver) {
      quivers.push_back({{"quiver", q.rows()}, {"count", count.str()}});
    }
    out["strata_by_quiver"] = std::move(quivers);
    auto shapes = nlohmann::ordered_json::array();
    for (const auto& [s, c] : report.strata_by_shape) {
      shapes.push_back({{"shape", s.parts()}, {"count_X", c.count_X.str()}, {"count_eig", c.count_eig.str()}});
    }
    out["strata_by_shape"] = std::move(shapes);
  }
  return out;
}

std::string report_to_csv(const CensusReport& report) {
  std::ostringstream os;
  os << "section,key,count,count_eig\n";
  os << "field,p," << report.p << ",\n";
  os << "field,e," << report.e << ",\n";
  os << "field,n," << report.n << ",\n";
  os << "field,q," << report.q << ",\n";
  os << "class,X," << report.counts.X << ",\n";
  os << "class,X_diag," << report.counts.X_diag << ",\n";
  os << "class,X_inf," << report.counts.X_inf << ",\n";
  os << "class,X_inf_diag," << report.counts.X_inf_diag << ",\n";
  os << "class,X_eig_fp," << report.counts.X_eig_fp << ",\n";
  os << "class,total," << report.counts.total << ",\n";
  if (report.has_strata) {
    for (const auto& [q, count] : report.strata_by_quiver) {
      os << "quiver,\"" << q.to_string() << "\"," << count << ",\n";
    }
    for (const auto& [s, c] : report.strata_by_shape) {
      os << "shape,\"" << shape_key(s) << "\"," << c.count_X << ',' << c.count_eig << '\n';
    }
  }
  return os.str();
}

}  // namespace fcensus
