#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "steenrod/action.hpp"
#include "steenrod/checks.hpp"
#include "steenrod/partition.hpp"

namespace {

using namespace steenrod;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_report(const CheckReport& r) {
  std::cout << "[" << to_string(r.status) << "] " << r.check_id;
  if (!r.params.empty()) std::cout << " " << r.params;
  if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
  std::cout << "  [" << r.wall_ms << " ms]\n";
  if (r.status == CheckStatus::Fail) {
    std::cout << "    lhs: " << r.lhs << "\n";
    std::cout << "    rhs: " << r.rhs << "\n";
  }
}

void print_summary(const std::vector<CheckReport>& reports) {
  int pass = 0, fail = 0, skip = 0, conj = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Skip: ++skip; break;
      case CheckStatus::Conjecture: ++conj; break;
    }
  }
  std::cout << reports.size() << " reports: " << pass << " pass, " << fail << " fail, " << skip
            << " skip, " << conj << " conjecture\n";
}

int cmd_apply(u32 p_value, int nvars, const std::string& op_text, const std::string& poly_text) {
  Prime p(p_value);
  OperatorExpression expr = OperatorExpression::parse(op_text);
  Polynomial f = Polynomial::parse(poly_text, p, nvars);
  std::cout << apply_expression(expr, f).to_string() << "\n";
  return kExitPass;
}

nlohmann::ordered_json partition_json(u32 p_value, const std::string& lambda_text) {
  Prime p(p_value);
  Partition lambda = Partition::parse(lambda_text);
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["p"] = p_value;
  doc["lambda"] = lambda.parts();
  doc["lambda_conjugate"] = lambda.conjugate().parts();
  bool col = is_column_p_regular(lambda, p);
  doc["column_p_regular"] = col;
  doc["d_s"] = d_s(lambda, p);
  if (!col) {
    doc["t_regular"] = false;
    return doc;
  }
  bool treg = is_t_regular(lambda, p);
  doc["t_regular"] = treg;
  if (!treg) return doc;

  TRegularData data = t_conjugate(lambda, p);
  doc["gamma"] = data.gamma.parts();
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const Partition& blk : data.blocks) blocks.push_back(blk.parts());
  doc["blocks"] = blocks;
  doc["block_n"] = data.n_k;
  doc["block_b"] = data.b_k;
  doc["d_c"] = d_c(lambda, p);
  RSequence rseq = tab_r_sequence(lambda, p);
  doc["r_sequence"] = rseq.r;
  doc["tableau"] = rseq.tableau;
  auto [smono, sign] = s_monomial(lambda, p);
  doc["spike_exponents"] = smono.exps();
  doc["epsilon"] = epsilon(lambda, p);
  doc["epsilon_sign"] = sign;
  doc["milnor_spike_lambda"] = milnor_spike(lambda, p).entries();
  doc["milnor_spike_gamma"] = milnor_spike(data.gamma, p).entries();
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mod-p Steenrod algebra engine and theorem verifier"};
  app.require_subcommand(1);

  // apply
  auto* apply = app.add_subcommand("apply", "apply an operator expression to a polynomial");
  u32 apply_p = 3;
  int apply_nvars = 1;
  std::string apply_op, apply_poly;
  apply->add_option("--p", apply_p, "odd prime")->required();
  apply->add_option("--nvars", apply_nvars, "number of variables")->required();
  apply->add_option("--op", apply_op, "operator expression, e.g. \"P^32 P^8 P^1\"")->required();
  apply->add_option("--poly", apply_poly, "polynomial, e.g. \"x1^2*x2^2\"")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run one registry check");
  std::string verify_check;
  u32 verify_p = 0;
  i64 verify_n = -1, verify_b = -1, verify_r = -1, verify_u = -1, verify_v = -1;
  i64 verify_maxds = 400;
  std::string verify_lambda, verify_expected;
  verify->add_option("--check", verify_check, "check id")->required();
  verify->add_option("--p", verify_p, "odd prime");
  verify->add_option("--n", verify_n, "n parameter");
  verify->add_option("--b", verify_b, "b parameter");
  verify->add_option("--r", verify_r, "r parameter");
  verify->add_option("--u", verify_u, "u parameter");
  verify->add_option("--v", verify_v, "v parameter");
  verify->add_option("--lambda", verify_lambda, "partition, e.g. 6,5,4,3,2");
  verify->add_option("--max-ds", verify_maxds, "degree bound override (default 400)");
  verify->add_option("--expected", verify_expected,
                     "golden fixture: canonical serialization the computed value must equal");

  // suite
  auto* suite = app.add_subcommand("suite", "run the default verification suite");
  std::vector<std::string> suite_filter;
  std::string suite_json, suite_params;
  u32 suite_p = 0;
  suite->add_option("--filter", suite_filter, "check ids to run")->delimiter(',');
  suite->add_option("--json", suite_json, "write a JSON report to this path");
  suite->add_option("--p", suite_p, "restrict to one prime");
  suite->add_option("--params-file", suite_params,
                    "JSON file of check requests (with optional expected fixtures)");

  // partition
  auto* partition = app.add_subcommand("partition", "partition combinatorics report (JSON)");
  u32 part_p = 3;
  std::string part_lambda;
  partition->add_option("--p", part_p, "odd prime")->required();
  partition->add_option("--lambda", part_lambda, "partition, e.g. 5,3,2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*apply) return cmd_apply(apply_p, apply_nvars, apply_op, apply_poly);

    if (*verify) {
      CheckRequest req;
      req.check_id = verify_check;
      if (!is_registered(verify_check)) {
        std::cerr << "unknown check id: " << verify_check << "\n";
        return kExitUsage;
      }
      if (verify_p) req.p = verify_p;
      if (verify_n >= 0) req.n = verify_n;
      if (verify_b >= 0) req.b = verify_b;
      if (verify_r >= 0) req.r = verify_r;
      if (verify_u >= 0) req.u = verify_u;
      if (verify_v >= 0) req.v = verify_v;
      if (!verify_lambda.empty()) req.lambda = Partition::parse(verify_lambda);
      if (!verify_expected.empty()) req.expected = verify_expected;
      req.max_ds = verify_maxds;
      std::vector<CheckReport> reports = run_check(req);
      for (const auto& r : reports) print_report(r);
      print_summary(reports);
      return exit_code_for(reports);
    }

    if (*suite) {
      std::optional<u32> p;
      if (suite_p) p = suite_p;
      std::vector<CheckReport> reports;
      if (!suite_params.empty()) {
        std::ifstream in(suite_params);
        if (!in) {
          std::cerr << "cannot read " << suite_params << "\n";
          return kExitUsage;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        reports = run_params_file(buf.str());
        if (!suite_filter.empty()) {
          std::vector<CheckReport> kept;
          for (auto& r : reports)
            if (std::find(suite_filter.begin(), suite_filter.end(), r.check_id) !=
                suite_filter.end())
              kept.push_back(std::move(r));
          reports = std::move(kept);
        }
      } else {
        reports = run_suite(suite_filter, p);
      }
      for (const auto& r : reports) print_report(r);
      print_summary(reports);
      if (!suite_json.empty()) {
        std::ofstream out(suite_json);
        if (!out) {
          std::cerr << "cannot write " << suite_json << "\n";
          return kExitUsage;
        }
        out << reports_to_json(reports);
      }
      return exit_code_for(reports);
    }

    if (*partition) {
      std::cout << partition_json(part_p, part_lambda).dump(2) << "\n";
      return kExitPass;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
