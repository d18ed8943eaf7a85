#pragma once

#include <cstddef>
#include <vector>

#include "convexity/point_set.hpp"
#include "convexity/rational.hpp"
#include "convexity/space.hpp"

namespace convexity {

inline constexpr std::size_t kDefaultAtomCap = 4096;

/// coefficient * x^x_power * y^y_power
struct Monomial {
  Rational coefficient;
  unsigned x_power = 0;
  unsigned y_power = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// sum(terms) >= 0, a polynomial of total degree at most two in (x, y).
struct PolynomialInequality {
  std::vector<Monomial> terms;

  Rational evaluate(const Rational& x, const Rational& y) const;
  bool holds_at(const Rational& x, const Rational& y) const { return evaluate(x, y) >= 0; }
  unsigned degree() const;

  friend bool operator==(const PolynomialInequality&, const PolynomialInequality&) = default;
};

/// A semi-algebraic description whose solution set in R^2 is exactly
/// {(a, 0) : a in points}.
struct BKCertificate {
  PointSet configuration;            // over the atom points
  std::vector<std::size_t> realized_by;  // smallest index set I with meet(C_i, i in I) = configuration
  std::vector<PolynomialInequality> inequalities;

  friend bool operator==(const BKCertificate&, const BKCertificate&) = default;
};

struct BKEmbedding {
  std::vector<Rational> atom_points;  // 1, 2, ..., t; point j stands for atom j
  std::vector<PointSet> atom_signatures;  // signature of atom j over the input sets
  std::vector<PointSet> atoms;        // ground points of atom j
  SetFamily sets;                     // C_i over the t atom points
  std::vector<BKCertificate> certificates;

  friend bool operator==(const BKEmbedding&, const BKEmbedding&) = default;
};

/// Places one point (j, 0) per realized Venn atom of `family` and lets C_i be
/// the points whose atom lies in S_i, so the nerve is preserved. Emits a
/// certificate for every nonempty configuration meet(C_i, i in I).
/// Throws InvalidArgument for an empty family, CapExceeded above `atom_cap`.
BKEmbedding bk_embed(const SetFamily& family, std::size_t atom_cap = kDefaultAtomCap);

/// Inequalities {a_1 <= x <= a_last, y >= 0} + {(x - a_i)(x - a_{i+1}) - y >= 0}
/// for consecutive sorted points; a single point uses (x - a_1)^2 - y >= 0.
std::vector<PolynomialInequality> bk_certificate_system(const std::vector<Rational>& points);

/// True iff for every nonempty I, meet(F_i) != {} exactly when meet(G_i) != {}.
/// Throws InvalidArgument when the families differ in length.
bool verify_nerve_isomorphism(const SetFamily& f, const SetFamily& g);

/// Every inequality of every certificate has degree <= 2, is satisfied by the
/// configuration's points, and the system cuts out exactly the configuration
/// among all atom points (plus the midpoints between consecutive ones).
bool verify_bk_certificates(const BKEmbedding& embedding);

}  // namespace convexity
