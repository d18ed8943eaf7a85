#include "convexity/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "convexity/bk_embed.hpp"
#include "convexity/builtin.hpp"
#include "convexity/colorful.hpp"
#include "convexity/errors.hpp"
#include "convexity/fractional_helly.hpp"
#include "convexity/io.hpp"
#include "convexity/selftest.hpp"

namespace convexity {

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::space, "space"},       {Command::invariants, "invariants"}, {Command::fh, "fh"},
    {Command::bk_embed, "bk-embed"}, {Command::colorful, "colorful"},     {Command::lemma31, "lemma31"},
    {Command::selftest, "selftest"},
};

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& c : kCommands) {
    if (name == c.name) return c.command;
  }
  throw ParseError("unknown command '" + name + "'");
}

std::string to_string(Command command) {
  for (const auto& c : kCommands) {
    if (c.command == command) return c.name;
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "human") return OutputFormat::human;
  if (name == "structured") return OutputFormat::structured;
  if (name == "delimited") return OutputFormat::delimited;
  throw ParseError("unknown format '" + name + "'");
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const Json& doc, const RunConfig& config, std::ostream& out) {
  switch (config.format) {
    case OutputFormat::structured:
      out << doc.dump() << '\n';
      return;
    case OutputFormat::human: {
      out << doc.at("schema").get<std::string>() << '\n';
      for (const auto& [key, value] : doc.items()) {
        if (key == "schema" || key == "version") continue;
        if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array())) {
          out << "  " << key << ":\n";
          for (const auto& item : value) out << "    " << item.dump() << '\n';
        } else {
          out << "  " << key << ": " << cell(value) << '\n';
        }
      }
      return;
    }
    case OutputFormat::delimited: {
      std::string head, row;
      for (const auto& [key, value] : doc.items()) {
        if (key == "version") continue;
        head += (head.empty() ? "" : "\t") + key;
        row += (row.empty() ? "" : "\t") + cell(value);
      }
      if (config.header) out << head << '\n';
      out << row << '\n';
      return;
    }
  }
}

std::size_t required(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing ") + flag);
  return *v;
}

const std::string& required(const std::string& v, const char* flag) {
  if (v.empty()) throw InvalidArgument(std::string("missing ") + flag);
  return v;
}

ConvexitySpace load_space(const RunConfig& config) {
  return make_space(load_space_argument(required(config.space, "--space")));
}

SetFamily load_family(const RunConfig& config) {
  if (!config.family.empty()) return load_family_argument(config.family);
  return load_family_argument(required(config.input, "--family or --input"));
}

Json space_record(const RunConfig& config) {
  const SpaceDescriptor descriptor = load_space_argument(required(config.space, "--space"));
  const ConvexitySpace space = make_space(descriptor);
  Json doc = to_json(descriptor);
  Json summary = Json::object();
  summary["name"] = space.name();
  summary["points"] = space.size();
  if (space.size() <= config.cap) {
    const auto report = check_axioms(space, config.cap);
    Json axioms = Json::object();
    for (const auto& c : report.checks) {
      axioms[c.name] = c.status == AxiomCheck::Status::pass ? "pass"
                       : c.status == AxiomCheck::Status::fail ? "fail: " + c.witness
                                                              : "vacuous";
    }
    summary["axioms"] = std::move(axioms);
    summary["convex_sets"] = enumerate_convex_sets(space, config.cap).size();
    summary["halfspaces"] = enumerate_halfspaces(space, config.cap).size();
    summary["separable"] = is_separable(space, config.cap).separable;
    if (!report.ok()) {
      throw HypothesisViolation("space " + space.name() + " violates the convexity axioms");
    }
  }
  doc["summary"] = std::move(summary);
  return doc;
}

Json invariants_record(const RunConfig& config) {
  InvariantLimits limits;
  limits.enumeration_cap = config.cap;
  return to_json(compute_invariants(load_space(config), config.selection, limits));
}

Json fh_record(const RunConfig& config) {
  const SetFamily family = load_family(config);
  const FHReport report = fh_report(family, required(config.k, "--k"));
  Json doc = to_json(report);
  if (config.d) {
    doc["d"] = *config.d;
    doc["optimal_beta"] = report.alpha > 0 && report.alpha < 1
                              ? Json(to_string(optimal_beta(report.alpha, *config.d), config.precision))
                              : Json(nullptr);
  }
  return doc;
}

Json bk_record(const RunConfig& config) {
  const SetFamily family = load_family(config);
  const BKEmbedding embedding = bk_embed(family);
  if (!verify_nerve_isomorphism(family, embedding.sets)) {
    throw VerificationFailure("bk-embed: nerve of the embedded family differs from the input");
  }
  if (!verify_bk_certificates(embedding)) throw VerificationFailure("bk-embed: a certificate does not check");
  Json doc = to_json(embedding);
  doc["nerve_check"] = "pass";
  doc["certificate_check"] = "pass";
  return doc;
}

Json colorful_record(const RunConfig& config) {
  ColorfulInput input = colorful_input_from_json(read_json_file(required(config.input, "--input")));
  if (config.m) input.instance.m = *config.m;
  if (config.r) input.instance.r = *config.r;
  const ConvexitySpace space = make_space(input.space);
  const ColorfulOutcome outcome = weak_colorful_run(space, input.instance, config.cap);
  std::string why;
  if (!verify_colorful_outcome(space, input.instance, outcome, &why)) {
    throw VerificationFailure("colorful: outcome does not verify: " + why);
  }
  return to_json(outcome);
}

Json lemma31_record(const RunConfig& config) {
  SeparatedPairsInput input = pairs_input_from_json(read_json_file(required(config.input, "--input")));
  if (config.r) input.r = *config.r;
  const ConvexitySpace space = make_space(input.space);
  const SeparatedPairResult result = large_separated_pairs(space, input.functions, input.r, config.cap);
  std::string why;
  if (!verify_separated_pair(space, input.functions, input.r, result.certificate, &why)) {
    throw VerificationFailure("lemma31: certificate does not verify: " + why);
  }
  return to_json(result);
}

int selftest_command(const RunConfig& config, std::ostream& out) {
  SelftestOptions options;
  options.seed = config.seed;
  if (!config.input.empty()) options.fixture = descriptor_from_json(read_json_file(config.input));
  const SelftestSummary summary = run_selftest(options);
  Json doc = tagged("selftest-summary");
  doc["seed"] = summary.seed;
  doc["passed"] = summary.results.size() - summary.failures();
  doc["failed"] = summary.failures();
  Json results = Json::array();
  for (const auto& r : summary.results) {
    Json item{{"module", r.module}, {"property", r.property}, {"passed", r.passed}};
    if (!r.passed) item["witness"] = r.witness;
    results.push_back(std::move(item));
  }
  doc["results"] = std::move(results);
  render(doc, config, out);
  return summary.ok() ? kExitOk : kExitVerification;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.cap == 0) throw InvalidArgument("--cap must be positive");
  if (config.command == Command::selftest) return selftest_command(config, out);
  Json doc;
  switch (config.command) {
    case Command::space: doc = space_record(config); break;
    case Command::invariants: doc = invariants_record(config); break;
    case Command::fh: doc = fh_record(config); break;
    case Command::bk_embed: doc = bk_record(config); break;
    case Command::colorful: doc = colorful_record(config); break;
    case Command::lemma31: doc = lemma31_record(config); break;
    case Command::selftest: break;
  }
  render(doc, config, out);
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.out.empty()) return dispatch(config, out);
    std::ostringstream buffer;
    const int status = dispatch(config, buffer);
    std::ofstream file(config.out);
    if (!file) throw InvalidArgument("cannot write '" + config.out + "'");
    file << buffer.str();
    return status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace convexity
