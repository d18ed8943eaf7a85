#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "convexity/partite.hpp"
#include "convexity/point_set.hpp"
#include "convexity/space.hpp"

namespace convexity {

/// A function E -> X with E = {0, ..., |values|-1}.
struct LabeledFunction {
  std::vector<std::size_t> values;

  std::size_t domain_size() const { return values.size(); }
  PointSet image(std::size_t universe) const;

  friend bool operator==(const LabeledFunction&, const LabeledFunction&) = default;
};

/// |Z|_f: number of domain elements mapped into Z.
std::size_t weight(const LabeledFunction& f, const PointSet& z);

struct SeparatedPairCertificate {
  PointSet e0;  // over the common domain E
  std::size_t i = 0;
  std::size_t j = 0;
  Halfspace gamma;

  friend bool operator==(const SeparatedPairCertificate&, const SeparatedPairCertificate&) = default;
};

/// Quantities computed on the way to a certificate.
struct SeparatedPairTrace {
  std::size_t total_weight = 0;  // N = m|E|
  std::size_t heavy_sets = 0;    // |{Z subset of S : Z heavy}|
  std::size_t x0 = 0;
  std::size_t weight_in_gamma = 0;
  std::size_t weight_in_complement = 0;

  friend bool operator==(const SeparatedPairTrace&, const SeparatedPairTrace&) = default;
};

struct SeparatedPairResult {
  SeparatedPairCertificate certificate;
  SeparatedPairTrace trace;

  friend bool operator==(const SeparatedPairResult&, const SeparatedPairResult&) = default;
};

/// Requires m >= 2 functions on one nonempty domain, r >= 3 and pairwise
/// hulls of the images with empty common intersection. Throws
/// HypothesisViolation when the hulls intersect, when the heavy-hull family
/// has no common point, or when no halfspace separates the needed pair.
SeparatedPairResult large_separated_pairs(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs,
                                          std::size_t r, std::size_t cap = kDefaultEnumerationCap);

/// Cardinality bound, both containments and that gamma is a halfspace.
bool verify_separated_pair(const ConvexitySpace& space, const std::vector<LabeledFunction>& fs, std::size_t r,
                           const SeparatedPairCertificate& certificate, std::string* reason = nullptr);

struct SeparationWitness {
  std::size_t u = 0;
  std::size_t v = 0;
  Halfspace gamma;

  friend bool operator==(const SeparationWitness&, const SeparationWitness&) = default;
};

/// f is indexed by the edges of h. A lists positions of class `cls` that must
/// lie in selection[cls]. Scans ordered pairs (u, v) of A, then halfspaces in
/// canonical order, for f(E_u) inside gamma and f(E_v) outside it, where E_w
/// are the transversals of `selection` through w.
std::optional<SeparationWitness> check_separable_subset(const ConvexitySpace& space, const CompletePartiteHypergraph& h,
                                                        const LabeledFunction& f, const PartiteSelection& selection,
                                                        std::size_t cls, const std::vector<std::size_t>& a,
                                                        std::size_t cap = kDefaultEnumerationCap);

struct RefineIntersecting {
  std::vector<std::size_t> a;  // positions in the last class
  std::size_t point = 0;

  friend bool operator==(const RefineIntersecting&, const RefineIntersecting&) = default;
};

struct SubsetSeparation {
  std::vector<std::size_t> a;
  SeparationWitness witness;

  friend bool operator==(const SubsetSeparation&, const SubsetSeparation&) = default;
};

struct RefineSeparated {
  PartiteSelection w;  // n positions per class
  std::vector<SubsetSeparation> separations;  // one per m-subset of w.back(), colex order

  friend bool operator==(const RefineSeparated&, const RefineSeparated&) = default;
};

struct Inconclusive {
  std::string stage;
  std::string reason;

  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using RefineOutcome = std::variant<RefineIntersecting, RefineSeparated, Inconclusive>;

/// Runs the refinement on H = K^k(t) with the last class special: fixes
/// W_k as its first n vertices, and for every m-subset A of W_k (colex order)
/// either reports a common point of the hulls of f(E_v), v in A, or separates
/// A with large_separated_pairs and shrinks the other classes to a complete
/// partite hypergraph inside the separated edge set.
RefineOutcome refine_for_any_f(const ConvexitySpace& space, const CompletePartiteHypergraph& h,
                               const LabeledFunction& f, std::size_t n, std::size_t m, std::size_t r,
                               std::size_t cap = kDefaultEnumerationCap);

struct MTupleWitness {
  std::size_t family = 0;
  std::vector<std::size_t> members;
  std::size_t point = 0;

  friend bool operator==(const MTupleWitness&, const MTupleWitness&) = default;
};

struct VennClass {
  std::size_t u = 0;  // member of this family whose edges map into gamma
  std::size_t v = 0;  // member whose edges map into the complement
  Halfspace gamma;

  friend bool operator==(const VennClass&, const VennClass&) = default;
};

struct VennPattern {
  std::vector<bool> inside;          // inside[c]: image lies in gamma_c
  std::vector<std::size_t> edge;     // one member index per family
  std::size_t image = 0;

  friend bool operator==(const VennPattern&, const VennPattern&) = default;
};

struct VennCertificate {
  std::vector<VennClass> classes;
  std::vector<VennPattern> patterns;

  friend bool operator==(const VennCertificate&, const VennCertificate&) = default;
};

using ColorfulOutcome = std::variant<MTupleWitness, VennCertificate, Inconclusive>;

struct ColorfulInstance {
  std::vector<std::vector<PointSet>> families;
  std::size_t m = 2;
  std::size_t r = 3;

  friend bool operator==(const ColorfulInstance&, const ColorfulInstance&) = default;
};

/// Throws HypothesisViolation naming the first non-intersecting transversal
/// or a non-convex member.
ColorfulOutcome weak_colorful_run(const ConvexitySpace& space, const ColorfulInstance& instance,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Re-checks a witness or certificate against the instance.
bool verify_colorful_outcome(const ConvexitySpace& space, const ColorfulInstance& instance,
                             const ColorfulOutcome& outcome, std::string* reason = nullptr);

}  // namespace convexity
