#pragma once

#include <string>

#include "json.hpp"

#include "convexity/bk_embed.hpp"
#include "convexity/colorful.hpp"
#include "convexity/fractional_helly.hpp"
#include "convexity/invariants.hpp"
#include "convexity/space.hpp"

namespace convexity {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace schema {
inline constexpr const char* space = "convexity-space";
inline constexpr const char* family = "set-family";
inline constexpr const char* bk = "bk-embedding";
inline constexpr const char* invariants = "invariant-report";
inline constexpr const char* fh = "fh-report";
inline constexpr const char* colorful_instance = "colorful-instance";
inline constexpr const char* colorful_outcome = "colorful-outcome";
inline constexpr const char* pairs_instance = "separated-pairs-instance";
inline constexpr const char* pairs_certificate = "separated-pair-certificate";
}  // namespace schema

/// Throws ParseError unless `doc` is an object tagged with `name` and the
/// supported version.
void expect_schema(const Json& doc, const std::string& name);
Json tagged(const std::string& name);

Json to_json(const SetFamily& family);
SetFamily family_from_json(const Json& doc);

Json to_json(const SpaceDescriptor& descriptor);
SpaceDescriptor descriptor_from_json(const Json& doc);

/// "box:2:3" / "lattice:1:5" shorthand.
SpaceDescriptor parse_space_shorthand(const std::string& text);

/// Shorthand or a path to a "convexity-space" file.
SpaceDescriptor load_space_argument(const std::string& text);

/// "lowerbound:d:n" or a path to a "set-family" file.
SetFamily load_family_argument(const std::string& text);

Json to_json(const BKEmbedding& embedding);
BKEmbedding bk_from_json(const Json& doc);

Json to_json(const InvariantReport& report);
InvariantReport invariants_from_json(const Json& doc);

Json to_json(const FHReport& report);
FHReport fh_from_json(const Json& doc);

struct ColorfulInput {
  SpaceDescriptor space;
  ColorfulInstance instance;

  friend bool operator==(const ColorfulInput&, const ColorfulInput&) = default;
};
Json to_json(const ColorfulInput& input);
ColorfulInput colorful_input_from_json(const Json& doc);

Json to_json(const ColorfulOutcome& outcome);
ColorfulOutcome colorful_outcome_from_json(const Json& doc, std::size_t universe);

struct SeparatedPairsInput {
  SpaceDescriptor space;
  std::vector<LabeledFunction> functions;
  std::size_t r = 3;

  friend bool operator==(const SeparatedPairsInput&, const SeparatedPairsInput&) = default;
};
Json to_json(const SeparatedPairsInput& input);
SeparatedPairsInput pairs_input_from_json(const Json& doc);

Json to_json(const SeparatedPairResult& result);
SeparatedPairResult pairs_result_from_json(const Json& doc, std::size_t universe);

/// Reads one JSON document; throws ParseError with the path on failure.
Json read_json_file(const std::string& path);

}  // namespace convexity
