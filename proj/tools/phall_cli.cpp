// Command-line driver: products, structure-constant tables, verification
// suites and class listings.

#include "phall/io.hpp"
#include "phall/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsage = 2;
constexpr int kBudget = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic derived Hall algebra calculator"};
  app.set_config("--config", "", "key = value file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  phall::RunConfig cfg;
  std::string algebra = "periodic-ext";
  std::string lhs, rhs;

  app.add_option("--quiver", cfg.quiver, "A1, A2, 1->2 or n:s-t,...")->capture_default_str();
  app.add_option("--q", cfg.q, "field size (prime)")->capture_default_str();
  app.add_option("--m", cfg.m, "period")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-dim", cfg.max_dim, "dimension bound, one entry or one per vertex")->delimiter(',');
  app.add_option("--max-total", cfg.max_total, "bound on the total dimension of a class tuple");
  app.add_option("--budget", cfg.budget, "enumeration budget")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled K-classes")->capture_default_str();
  app.add_option("--k-samples", cfg.k_samples, "K-tuples sampled per class triple (0 = all)");
  app.add_option("--out", cfg.out, "output file (default stdout)");

  auto* product = app.add_subcommand("product", "multiply two basis literals");
  product->add_option("--algebra", algebra)->check(CLI::IsMember(phall::algebra_names()))->capture_default_str();
  product->add_option("lhs", lhs)->required();
  product->add_option("rhs", rhs)->required();

  auto* table = app.add_subcommand("table", "structure constants among bounded basis elements (CSV)");
  table->add_option("--algebra", algebra)->check(CLI::IsMember(phall::algebra_names()))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  verify->add_option("--suite", cfg.suite, "suite name")->required();

  auto* list = app.add_subcommand("list-classes", "iso classes within the bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  for (int d : cfg.max_dim) {
    if (d < 0) {
      std::cerr << "error: dimension bounds must be nonnegative\n";
      return kUsage;
    }
  }

  try {
    if (*product) {
      emit(phall::cmd_product(cfg, lhs, rhs, algebra), cfg.out);
    } else if (*table) {
      emit(phall::cmd_table(cfg, algebra), cfg.out);
    } else if (*list) {
      emit(phall::cmd_list_classes(cfg), cfg.out);
    } else if (*verify) {
      const auto& names = phall::suite_catalog();
      if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
        std::cerr << "error: unknown suite '" << cfg.suite << "'\n";
        return kUsage;
      }
      const phall::SuiteReport r = phall::run_suite(cfg.suite, cfg);
      emit(r.to_json().dump(2) + "\n", cfg.out);
      return r.passed() ? 0 : 1;
    }
  } catch (const phall::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
