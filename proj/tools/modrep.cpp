#include <fstream>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "modrep/cli/runner.hpp"
#include "modrep/error.hpp"
#include "modrep/ffla/field.hpp"
#include "modrep/rep/algebra.hpp"

namespace {

using namespace modrep;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunFlags {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> window;
  std::optional<unsigned> retries;
  std::string out, dot, format = "text";
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--seed", f.seed, "random seed for all searches");
  cmd->add_option("--window", f.window, "Tate cohomology window w (degrees -w..w)");
  cmd->add_option("--retries", f.retries, "retry budget of randomized searches");
  cmd->add_option("--out", f.out, "write the JSON report to this file");
  cmd->add_option("--dot", f.dot, "write the ext-block graph in DOT format to this file");
  cmd->add_option("--format", f.format, "stdout format")->check(CLI::IsMember({"text", "json", "dot"}));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

int run(cli::Scenario s, const RunFlags& f) {
  if (f.seed) s.options.seed = *f.seed;
  if (f.window) s.options.window = *f.window;
  if (f.retries) s.options.retries = *f.retries;
  const auto report = cli::run_scenario(s);
  std::cout << cli::emit(report, cli::parse_format(f.format));
  if (!f.out.empty()) write_file(f.out, cli::emit(report, cli::Format::Json));
  if (!f.dot.empty()) write_file(f.dot, cli::emit(report, cli::Format::Dot));
  return report.passed() ? kExitPass : kExitFail;
}

// Multiplicative order of p modulo m.
unsigned order_mod(std::uint64_t p, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t x = p % m;
  unsigned k = 1;
  while (x != 1) {
    x = x * p % m;
    ++k;
  }
  return k;
}

// GF(p^n) splits kG once it holds the e-th roots of unity, e the p'-part of
// the exponent; smaller divisors of ord_e(p) may already suffice, so each is
// tested.
int suggest(const std::string& spec, std::optional<std::uint32_t> p_flag) {
  const auto cg = cli::resolve_group(spec);
  const std::uint32_t p = p_flag.value_or(cg.p);
  if (p < 2) throw InvalidArgument("group \"" + spec + "\" needs --p");
  const auto& G = *cg.group;
  std::uint64_t e = 1;
  for (groups::Elem g = 0; g < G.order(); ++g) e = std::lcm(e, static_cast<std::uint64_t>(G.element_order(g)));
  while (e % p == 0) e /= p;
  const unsigned top = order_mod(p, e);
  std::cout << "exponent p'-part " << e << ", roots of unity in GF(" << p << "^" << top << ")\n";
  for (unsigned n = 1; n <= top; ++n) {
    if (top % n) continue;
    rep::GroupAlgebra A(cg.group, ffla::Field::make(p, n));
    const bool split = A.is_split();
    std::cout << "GF(" << p << "^" << n << "): " << (split ? "splitting field" : "not split") << "\n";
    if (split) return kExitPass;
  }
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular representation experiments: blocks, rank varieties, ext-blocks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);

  RunFlags run_flags, builtin_flags;
  std::string path, name;
  auto* run_cmd = app.add_subcommand("run", "run a scenario file");
  run_cmd->add_option("file", path, "scenario INI file")->required();
  add_run_flags(run_cmd, run_flags);

  auto* builtin_cmd = app.add_subcommand("builtin", "run a built-in scenario");
  builtin_cmd->add_option("name", name, "scenario name")->required()->check(CLI::IsMember(cli::builtin_names()));
  add_run_flags(builtin_cmd, builtin_flags);

  bool as_ini = false;
  auto* list_cmd = app.add_subcommand("list", "list built-in scenarios");
  list_cmd->add_flag("--ini", as_ini, "print each as a scenario file");

  std::string spec;
  std::optional<std::uint32_t> p;
  auto* fields_cmd = app.add_subcommand("fields", "find the smallest splitting field");
  fields_cmd->add_option("--suggest", spec, "group spec")->required();
  fields_cmd->add_option("--p", p, "characteristic (defaults to the group's prime)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*run_cmd) return run(cli::load_scenario(path), run_flags);
    if (*builtin_cmd) return run(cli::builtin(name), builtin_flags);
    if (*list_cmd) {
      for (const auto& n : cli::builtin_names()) std::cout << (as_ini ? cli::to_ini(cli::builtin(n)) + "\n" : n + "\n");
      return kExitPass;
    }
    if (*fields_cmd) return suggest(spec, p);
  } catch (const cli::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
