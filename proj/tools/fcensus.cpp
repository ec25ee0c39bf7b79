// fcensus: census, predictions and verification from the command line.
//
// Exit codes: 0 ok, 1 a verification check failed, 2 usage, 3 work cap.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "fcensus/census.hpp"
#include "fcensus/formulas.hpp"
#include "fcensus/jordan_shape.hpp"
#include "fcensus/quiver.hpp"
#include "fcensus/report.hpp"
#include "fcensus/subalgebras.hpp"
#include "fcensus/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fcensus;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct CensusArgs {
  unsigned p = 2, e = 1, n = 2;
  bool strata = false;
  std::string format = "json";
  std::string output = "-";
  unsigned workers = 1;
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
  std::optional<std::uint64_t> work_cap;
};

struct PredictArgs {
  std::string tag;
  unsigned p = 2;
  unsigned n = 2;
  std::optional<std::string> q;
};

struct VerifyArgs {
  std::string suite = "fast";
  std::string out = "-";
  unsigned workers = 0;
  std::uint64_t seed = 1;
};

struct EnumArgs {
  unsigned n = 2;
  unsigned p = 2;
  unsigned dim = 1;
  bool maximizers = false;
  bool non_unital = false;
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::kOutOfRange, "cannot open " + path);
  f << text;
}

int cmd_census(const CensusArgs& a) {
  CensusOptions opt;
  opt.strata = a.strata;
  opt.workers = a.workers;
  opt.chunk_size = a.chunk_size;
  if (a.work_cap) {
    opt.work_cap = *a.work_cap;
    if (a.strata) opt.strata_cap = *a.work_cap;
  }
  const CensusReport r = census(a.p, a.e, a.n, opt);
  write_text(a.output, a.format == "csv" ? report_to_csv(r) : report_to_json(r).dump(2) + "\n");
  return kExitOk;
}

int cmd_predict(const PredictArgs& a) {
  const auto tag = parse_class_tag(a.tag);
  if (!tag) throw CLI::ValidationError("--class", "unknown class tag " + a.tag);
  json out;
  out["class"] = a.tag;
  out["p"] = a.p;
  if (*tag == ClassTag::kXN2Exact) {
    if (!a.q) throw CLI::ValidationError("--q", "X_n2_exact needs --q");
    const BigInt q(*a.q);
    out["q"] = q.str();
    out["value"] = exact_X_n2(a.p, q).str();
  } else {
    const LeadingTerm lt = leading_term(*tag, a.p, a.n);
    out["n"] = a.n;
    out["coefficient"] = lt.coefficient.str();
    out["exponent"] = lt.exponent;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.full = a.suite == "full";
  opt.workers = a.workers;
  opt.seed = a.seed;
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (a.out != "-") {
    file.open(a.out);
    if (!file) throw Error(Errc::kOutOfRange, "cannot open " + a.out);
    os = &file;
  }
  bool failed = false;
  run_suite(opt, [&](const VerifyOutcome& o) {
    *os << to_json(o).dump() << "\n" << std::flush;
    if (o.status == VerifyStatus::kFail) failed = true;
    if (a.out != "-") std::cerr << verify_status_name(o.status) << "  " << o.id << "\n";
  });
  return failed ? kExitVerifyFail : kExitOk;
}

int cmd_quivers(const EnumArgs& a) {
  json out;
  if (a.maximizers) {
    const QuiverMaximizers m = maximizers(a.n);
    out["n"] = a.n;
    out["dim"] = m.max_dim;
    out["quivers"] = json::array();
    for (const auto& q : m.classes) out["quivers"].push_back(q.rows());
  } else {
    std::vector<Quiver> all;
    for (const auto& q : enumerate_bal(a.n)) all.push_back(canonicalize(q));
    std::sort(all.begin(), all.end());
    out = json::array();
    for (const auto& q : all) out.push_back({{"quiver", q.rows()}, {"dim", dim_X_diag(q)}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_shapes(const EnumArgs& a) {
  json out;
  if (a.maximizers) {
    const ShapeOptimum m = optimal_shapes(a.n);
    out["n"] = a.n;
    out["dim"] = m.max_dim;
    out["shapes"] = json::array();
    for (const auto& s : m.classes) out["shapes"].push_back(s.parts());
  } else {
    auto all = enumerate_shapes(a.n);
    std::sort(all.begin(), all.end());
    out = json::array();
    for (const auto& s : all) out.push_back({{"shape", s.parts()}, {"dim", dim_X_eig(s)}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_subalgebras(const EnumArgs& a) {
  json out;
  out["p"] = a.p;
  out["n"] = a.n;
  out["unital"] = !a.non_unital;
  if (a.maximizers) {
    const unsigned top = a.n * a.n / 4 + 1;
    out["dim"] = top;
    out["count"] = commutative_census(a.p, a.n, top, kDefaultSubalgebraCap, !a.non_unital).count.str();
    if (top + 1 <= a.n * a.n) {
      out["count_above"] = commutative_census(a.p, a.n, top + 1, kDefaultSubalgebraCap, !a.non_unital).count.str();
    }
  } else {
    const CommutativeCensus c = commutative_census(a.p, a.n, a.dim, kDefaultSubalgebraCap, !a.non_unital);
    out["dim"] = a.dim;
    out["count"] = c.count.str();
    out["candidates"] = c.candidates.str();
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive censuses of Frobenius-commuting matrices"};
  app.require_subcommand(1);

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "count X and its subclasses in M_n(F_{p^e})");
  census_cmd->add_option("--p", census_args.p, "characteristic")->required();
  census_cmd->add_option("--e", census_args.e, "extension degree")->required();
  census_cmd->add_option("--n", census_args.n, "matrix size")->required();
  census_cmd->add_flag("--strata", census_args.strata, "tally quiver and Jordan-shape strata");
  census_cmd->add_option("--out", census_args.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("-o,--output", census_args.output, "report path, - for stdout");
  census_cmd->add_option("--workers", census_args.workers)->envname("FCENSUS_WORKERS")->check(CLI::PositiveNumber);
  census_cmd->add_option("--chunk-size", census_args.chunk_size)->check(CLI::PositiveNumber);
  census_cmd->add_option("--work-cap", census_args.work_cap)->envname("FCENSUS_WORK_CAP");

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "leading term or exact count from the closed forms");
  predict_cmd->add_option("--class", predict_args.tag, "X_diag, X_inf, X_inf_diag, X_eig_fp or X_n2_exact")
      ->required();
  predict_cmd->add_option("--p", predict_args.p)->required();
  predict_cmd->add_option("--n", predict_args.n);
  predict_cmd->add_option("--q", predict_args.q);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--suite", verify_args.suite)->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--out", verify_args.out, "JSON-lines path, - for stdout");
  verify_cmd->add_option("--workers", verify_args.workers)->envname("FCENSUS_WORKERS");
  verify_cmd->add_option("--seed", verify_args.seed);

  EnumArgs enum_args;
  auto* quivers_cmd = app.add_subcommand("quivers", "balanced quivers with n edges");
  auto* shapes_cmd = app.add_subcommand("shapes", "Jordan shapes of size n");
  auto* sub_cmd = app.add_subcommand("subalgebras", "commutative subalgebras of M_n(F_p)");
  for (auto* cmd : {quivers_cmd, shapes_cmd, sub_cmd}) {
    cmd->add_option("--n", enum_args.n)->required();
    cmd->add_flag("--maximizers", enum_args.maximizers);
  }
  sub_cmd->add_option("--p", enum_args.p)->required();
  sub_cmd->add_option("--dim", enum_args.dim);
  sub_cmd->add_flag("--non-unital", enum_args.non_unital);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (census_cmd->parsed()) return cmd_census(census_args);
    if (predict_cmd->parsed()) return cmd_predict(predict_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (quivers_cmd->parsed()) return cmd_quivers(enum_args);
    if (shapes_cmd->parsed()) return cmd_shapes(enum_args);
    if (sub_cmd->parsed()) return cmd_subalgebras(enum_args);
  } catch (const CLI::Error& e) {
    std::cerr << "fcensus: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "fcensus: " << e.what() << "\n";
    return e.code() == Errc::kWorkCapExceeded ? kExitCap : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fcensus: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
