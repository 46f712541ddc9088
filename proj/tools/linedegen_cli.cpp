#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "linedegen/commands.hpp"

namespace {

struct Flags {
  unsigned n = 0;
  unsigned d = 0;
  unsigned k = 0;
  std::optional<unsigned> max_sum;
  std::optional<unsigned> max_k;
  std::optional<unsigned> max_l;
  std::string kind;
  bool json = false;
  bool quiet = false;
};

int emit(const linedegen::OutputEnvelope& env, const Flags& flags) {
  if (flags.json) {
    std::cout << env.to_json().dump(2) << '\n';
  } else {
    if (!flags.quiet)
      for (const auto& line : env.header) std::cout << line << '\n';
    for (const auto& line : env.rows) std::cout << line << '\n';
  }
  if (!env.error.empty()) std::cerr << "error: " << env.error << '\n';
  return env.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classes of lines on hypersurfaces and their degenerations"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Emit the JSON envelope");
    sub->add_flag("--quiet", flags.quiet, "Suppress table headers");
  };

  auto* count = app.add_subcommand("count", "Class (and number) of lines on a generic degree-d hypersurface in P^n");
  count->add_option("--n", flags.n, "Ambient dimension")->required();
  count->add_option("--d", flags.d, "Hypersurface degree")->required();
  add_common(count);

  auto* split = app.add_subcommand("split", "Split the class of lines under degeneration into K (degree k) and L");
  split->add_option("--n", flags.n, "Ambient dimension")->required();
  split->add_option("--d", flags.d, "Hypersurface degree")->required();
  split->add_option("--k", flags.k, "Degree of the component K")->required();
  add_common(split);

  auto* verify = app.add_subcommand("verify", "Sweep a Chern-class identity symbolically");
  verify->add_option("kind", flags.kind, "thm33 | prop311 | lemma34 | eq36 | lemma37")
      ->required()
      ->check(CLI::IsMember({"thm33", "prop311", "lemma34", "eq36", "lemma37"}));
  verify->add_option("--max-sum", flags.max_sum, "Bound on k+l (thm33)");
  verify->add_option("--max-k", flags.max_k, "Bound on k (prop311)");
  verify->add_option("--max-l", flags.max_l, "Bound on l (prop311, lemma34, eq36, lemma37)");
  add_common(verify);

  auto* normal = app.add_subcommand("normal-types", "Admissible normal-bundle splitting types of lines on K");
  normal->add_option("--n", flags.n, "Ambient dimension")->required();
  normal->add_option("--k", flags.k, "Degree of K")->required();
  add_common(normal);

  auto* witness = app.add_subcommand("witness", "Exact surjectivity checks on the explicit degeneration family");
  witness->add_option("--n", flags.n, "Ambient dimension")->required();
  witness->add_option("--d", flags.d, "Hypersurface degree")->required();
  witness->add_option("--k", flags.k, "Degree of K")->required();
  add_common(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using namespace linedegen;
  if (*count) return emit(cmd_count(flags.n, flags.d), flags);
  if (*split) return emit(cmd_split(flags.n, flags.d, flags.k), flags);
  if (*verify) return emit(cmd_verify(flags.kind, {flags.max_sum, flags.max_k, flags.max_l}), flags);
  if (*normal) return emit(cmd_normal_types(flags.n, flags.k), flags);
  if (*witness) return emit(cmd_witness(flags.n, flags.d, flags.k), flags);
  return 2;
}
