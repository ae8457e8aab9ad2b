#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "parthom/classify.hpp"
#include "parthom/errors.hpp"
#include "parthom/evaluate.hpp"
#include "parthom/io.hpp"
#include "parthom/oracle.hpp"
#include "selftest.hpp"

namespace {

enum Status { kOk = 0, kFailure = 1, kParse = 2, kHard = 3, kGuard = 4 };

struct Flags {
  bool json = false;
  std::optional<unsigned> decimal;
  unsigned threads = 1;
};

void print_value(const parthom::Rational& z, const Flags& f) {
  if (f.json) {
    nlohmann::ordered_json j{{"value", parthom::to_string(z)}};
    if (f.decimal) {
      j["decimal"] = parthom::to_decimal(z, *f.decimal);
      j["decimal_is_approximate"] = true;
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << parthom::to_string(z) << "\n";
  if (f.decimal) std::cout << "approx " << parthom::to_decimal(z, *f.decimal) << " (truncated)\n";
}

int cmd_classify(const std::string& matrix, const Flags& f) {
  const auto a = parthom::read_matrix_file(matrix);
  const auto v = parthom::classify(a);
  std::cout << (f.json ? parthom::verdict_json(v) : parthom::verdict_text(v));
  return kOk;
}

int cmd_eval(const std::string& matrix, const std::string& graph, const Flags& f) {
  const auto a = parthom::read_matrix_file(matrix);
  const auto g = parthom::read_graph_file(graph);
  const auto v = parthom::classify(a);
  if (!v.tractable) {
    if (f.json)
      std::cout << parthom::verdict_json(v);
    else
      std::cerr << "refusing to evaluate: " << parthom::verdict_text(v);
    return kHard;
  }
  print_value(parthom::eval_tractable(a, v, g), f);
  return kOk;
}

int cmd_oracle(const std::string& matrix, const std::string& graph, const Flags& f) {
  const auto a = parthom::read_matrix_file(matrix);
  const auto g = parthom::read_graph_file(graph);
  parthom::OracleOptions opts;
  opts.threads = f.threads;
  print_value(parthom::eval_partition_bruteforce(a, g, opts), f);
  return kOk;
}

int cmd_selftest(std::uint64_t seed, const Flags& f) {
  parthom::selftest::Options opts;
  opts.seed = seed;
  opts.threads = f.threads;
  if (!f.json)
    opts.on_result = [](const parthom::selftest::CriterionResult& r) {
      std::cout << parthom::selftest::format(r) << std::endl;
    };
  const auto results = parthom::selftest::run(opts);
  bool ok = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    j.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds},
                 {"detail", r.detail}});
  }
  if (f.json) std::cout << j.dump(2) << "\n";
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide tractability of graph homomorphism partition functions and evaluate them exactly"};
  app.require_subcommand(1);
  Flags flags;
  unsigned decimal_digits = 0;
  app.add_flag("--json", flags.json, "Machine-readable output");
  app.add_option("--threads", flags.threads, "Thread cap for the brute-force oracle")->check(CLI::PositiveNumber);
  auto* decimal = app.add_option("--decimal", decimal_digits, "Also print a truncated fixed-point value");

  std::string matrix, graph;
  std::uint64_t seed = parthom::selftest::Options{}.seed;
  auto* classify = app.add_subcommand("classify", "Report whether Z_A is tractable or #P-hard");
  classify->add_option("matrix", matrix, "Matrix file")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate Z_A(G) exactly for a tractable A");
  eval->add_option("matrix", matrix, "Matrix file")->required();
  eval->add_option("graph", graph, "Graph file")->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force Z_A(G); guarded by PARTHOM_ORACLE_GUARD");
  oracle->add_option("matrix", matrix, "Matrix file")->required();
  oracle->add_option("graph", graph, "Graph file")->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--seed", seed, "Random seed");
  for (auto* sub : {classify, eval, oracle, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  if (*decimal) flags.decimal = decimal_digits;

  try {
    if (*classify) return cmd_classify(matrix, flags);
    if (*eval) return cmd_eval(matrix, graph, flags);
    if (*oracle) return cmd_oracle(matrix, graph, flags);
    return cmd_selftest(seed, flags);
  } catch (const parthom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const parthom::OracleGuardExceeded& e) {
    std::cerr << "oracle guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
