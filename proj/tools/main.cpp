#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using solitonlab::cli::Format;
using solitonlab::cli::RunConfig;

namespace {

struct Options {
  RunConfig config;
  std::string out;
  std::string format;
  double range = 0.0, tol = 0.0;
  int grid = 0;
};

void add_common(CLI::App* app, Options& o) {
  const auto last = CLI::MultiOptionPolicy::TakeLast;
  app->add_option("--member", o.config.member, "zoo member: s7, grim-lorentz, grim-riemann")->multi_option_policy(last);
  app->add_option("--range", o.range, "half-width of the sampled x1 range, or the s range for bounds")
      ->multi_option_policy(last);
  app->add_option("--delta", o.config.delta, "profile integrated on |y| <= 1 - delta")->multi_option_policy(last);
  app->add_option("--tol", o.tol, "override every check tolerance")->multi_option_policy(last);
  app->add_option("--grid", o.grid, "number of samples or table rows")->multi_option_policy(last);
  app->add_option("--seed", o.config.seed, "RNG seed")->multi_option_policy(last);
  app->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->multi_option_policy(last);
  app->add_option("--out", o.out, "output file (default stdout)")->multi_option_policy(last);
  app->add_option("--g", o.config.g_spec, "bound spec: affine:A,B | power:p,s | rlogk:A,B,k | logaffine:A,B | csv:path")
      ->multi_option_policy(last);
  app->add_flag("--gm", o.config.gm, "also tabulate G^M(s) = G(int_0^s dr/G)");
  app->add_option("--wmax", o.config.wmax, "largest w in the growth table")->multi_option_policy(last);
  app->add_option("--S", o.config.S, "directrix half-length")->multi_option_policy(last);
  app->add_option("--curve", o.config.curve, "directrix or plateau")->multi_option_policy(last);
  app->add_option("--table", o.config.table, "growth table: w or rM")->multi_option_policy(last);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solitonlab: spacelike translating solitons in Lorentzian products"};
  app.require_subcommand(1);
  Options o;
  using Command = int (*)(const RunConfig&, std::ostream&);
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"zoo", {"dump a zoo member as a table", solitonlab::cli::cmd_zoo}},
      {"verify", {"run the identity and inequality suite", solitonlab::cli::cmd_verify}},
      {"bounds", {"classify a bound function and tabulate it", solitonlab::cli::cmd_bounds}},
      {"growth", {"growth ratio tables of the profile example", solitonlab::cli::cmd_growth}},
      {"length", {"curve length tables", solitonlab::cli::cmd_length}},
  };
  std::map<CLI::App*, Command> handlers;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_common(sub, o);
    handlers[sub] = entry.second;
  }
  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--range")) o.config.range = o.range;
  if (sub->count("--tol")) o.config.tol = o.tol;
  if (sub->count("--grid")) o.config.grid = o.grid;
  if (!o.format.empty()) o.config.format = o.format == "json" ? Format::json : Format::csv;

  try {
    if (o.out.empty()) return handlers.at(sub)(o.config, std::cout);
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << o.out << '\n';
      return 2;
    }
    const int code = handlers.at(sub)(o.config, file);
    file.close();
    if (!file) {
      std::cerr << "error: failed writing " << o.out << '\n';
      return 2;
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
