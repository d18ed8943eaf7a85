// convexity: command-line front end.
//   convexity invariants --space box:2:3 --all
//   convexity fh --family lowerbound:2:6 --k 2
#include <iostream>

#include "CLI11.hpp"

#include "convexity/cli.hpp"

using namespace convexity;

namespace {

struct Flags {
  std::string format = "structured";
  std::optional<std::size_t> k, m, r, d;
  bool all = false;
  bool radon = false, helly = false, helly_direct = false, vc = false, dual_vc = false, separable = false,
       bounds = false;
};

void add_common(CLI::App* sub, RunConfig& config, Flags& flags) {
  sub->add_option("--format", flags.format, "human | structured | delimited")
      ->check(CLI::IsMember({"human", "structured", "delimited"}));
  sub->add_option("--out", config.out, "write the record to this file");
  sub->add_option("--cap", config.cap, "largest |X| for convex-family enumeration");
  sub->add_flag("!--no-header", config.header, "omit the header row of delimited output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite convexity spaces: invariants, fractional Helly counts, certificates"};
  app.require_subcommand(1);
  RunConfig config;
  Flags flags;

  auto* space = app.add_subcommand("space", "describe a space and check its axioms");
  space->add_option("--space", config.space, "box:D:S, lattice:D:S or a space file")->required();

  auto* inv = app.add_subcommand("invariants", "Radon, Helly, VC and bound checks");
  inv->add_option("--space", config.space, "box:D:S, lattice:D:S or a space file")->required();
  inv->add_flag("--all", flags.all, "every invariant (default when none is named)");
  inv->add_flag("--radon", flags.radon);
  inv->add_flag("--helly", flags.helly);
  inv->add_flag("--helly-direct", flags.helly_direct);
  inv->add_flag("--vc", flags.vc);
  inv->add_flag("--dual-vc", flags.dual_vc);
  inv->add_flag("--separable", flags.separable);
  inv->add_flag("--bounds", flags.bounds);

  auto* fh = app.add_subcommand("fh", "intersecting k-tuples and largest intersecting subfamily");
  fh->add_option("--family", config.family, "lowerbound:D:N or a set-family file");
  fh->add_option("--input", config.input, "set-family file");
  fh->add_option("--k", flags.k)->required();
  fh->add_option("--d", flags.d, "also report 1-(1-alpha)^(1/(d+1))");
  fh->add_option("--precision", config.precision, "significant digits of the optimal beta")
      ->check(CLI::Range(1, 45));

  auto* bk = app.add_subcommand("bk-embed", "embed a set family into the plane by quadratic inequalities");
  bk->add_option("--family", config.family, "set-family file");
  bk->add_option("--input", config.input, "set-family file");

  auto* colorful = app.add_subcommand("colorful", "run the colorful pipeline on an instance file");
  colorful->add_option("--input", config.input, "colorful-instance file")->required();
  colorful->add_option("--m", flags.m);
  colorful->add_option("--r", flags.r);

  auto* lemma = app.add_subcommand("lemma31", "large separated pairs on an instance file");
  lemma->add_option("--input", config.input, "separated-pairs-instance file")->required();
  lemma->add_option("--r", flags.r);

  auto* selftest = app.add_subcommand("selftest", "run the property suite");
  selftest->add_option("--seed", config.seed);
  selftest->add_option("--input", config.input, "explicit space fixture whose axioms are checked");

  for (auto* sub : {space, inv, fh, bk, colorful, lemma, selftest}) add_common(sub, config, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitParse;
  }

  config.command = parse_command(app.get_subcommands().front()->get_name());
  config.format = parse_format(flags.format);
  config.k = flags.k;
  config.m = flags.m;
  config.r = flags.r;
  config.d = flags.d;
  const bool named = flags.radon || flags.helly || flags.helly_direct || flags.vc || flags.dual_vc ||
                     flags.separable || flags.bounds;
  if (named && !flags.all) {
    config.selection = {flags.radon, flags.helly, flags.helly_direct, flags.vc, flags.dual_vc, flags.separable,
                        flags.bounds};
  }
  return run(config, std::cout, std::cerr);
}
