#include "convexity/bk_embed.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "convexity/combinatorics.hpp"
#include "convexity/errors.hpp"

namespace convexity {

namespace {

constexpr std::size_t kMaxNerveSets = 24;

void require_nerve_size(std::size_t m) {
  if (m > kMaxNerveSets) {
    throw CapExceeded("nerve computations enumerate all 2^m index sets; m = " + std::to_string(m) + " exceeds " +
                      std::to_string(kMaxNerveSets));
  }
}

PolynomialInequality linear(const Rational& x_coeff, const Rational& constant) {
  return {{{x_coeff, 1, 0}, {constant, 0, 0}}};
}

PolynomialInequality between_roots(const Rational& a, const Rational& b) {
  // (x - a)(x - b) - y >= 0
  return {{{Rational(1), 2, 0}, {-(a + b), 1, 0}, {a * b, 0, 0}, {Rational(-1), 0, 1}}};
}

}  // namespace

Rational PolynomialInequality::evaluate(const Rational& x, const Rational& y) const {
  Rational total = 0;
  for (const auto& term : terms) {
    Rational value = term.coefficient;
    for (unsigned i = 0; i < term.x_power; ++i) value *= x;
    for (unsigned i = 0; i < term.y_power; ++i) value *= y;
    total += value;
  }
  return total;
}

unsigned PolynomialInequality::degree() const {
  unsigned out = 0;
  for (const auto& term : terms) {
    if (term.coefficient != 0) out = std::max(out, term.x_power + term.y_power);
  }
  return out;
}

std::vector<PolynomialInequality> bk_certificate_system(const std::vector<Rational>& points) {
  if (points.empty()) throw InvalidArgument("bk_certificate_system: no points");
  std::vector<Rational> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<PolynomialInequality> system;
  system.push_back(linear(Rational(1), -sorted.front()));   // x >= a_1
  system.push_back(linear(Rational(-1), sorted.back()));    // x <= a_last
  system.push_back({{{Rational(1), 0, 1}}});                // y >= 0
  if (sorted.size() == 1) {
    system.push_back(between_roots(sorted[0], sorted[0]));
  } else {
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) system.push_back(between_roots(sorted[i], sorted[i + 1]));
  }
  return system;
}

BKEmbedding bk_embed(const SetFamily& family, std::size_t atom_cap) {
  if (family.sets.empty()) throw InvalidArgument("bk_embed: the family is empty");
  family.validate();
  const std::size_t m = family.sets.size();
  require_nerve_size(m);

  BKEmbedding out;
  // One atom per realized membership signature, numbered by first ground point.
  std::unordered_map<PointSet, std::size_t, PointSetHash> atom_of;
  for (std::size_t x = 0; x < family.ground_size; ++x) {
    PointSet signature(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (family.sets[i].contains(x)) signature.insert(i);
    }
    auto [it, fresh] = atom_of.emplace(signature, out.atoms.size());
    if (fresh) {
      out.atom_signatures.push_back(signature);
      out.atoms.emplace_back(family.ground_size);
    }
    out.atoms[it->second].insert(x);
  }
  const std::size_t t = out.atoms.size();
  if (t > atom_cap) {
    throw CapExceeded("bk_embed: " + std::to_string(t) + " Venn atoms exceed the cap " + std::to_string(atom_cap));
  }
  for (std::size_t j = 0; j < t; ++j) out.atom_points.emplace_back(static_cast<long long>(j + 1));

  out.sets.ground_size = t;
  for (std::size_t i = 0; i < m; ++i) {
    PointSet c(t);
    for (std::size_t j = 0; j < t; ++j) {
      if (out.atom_signatures[j].contains(i)) c.insert(j);
    }
    out.sets.sets.push_back(std::move(c));
  }

  // Index sets by size, then lexicographically, so each configuration is
  // attributed to its canonically smallest I.
  std::unordered_set<PointSet, PointSetHash> seen;
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> index_set = first_combination(size);
    do {
      PointSet meet = PointSet::full(t);
      for (std::size_t i : index_set) meet &= out.sets.sets[i];
      if (!meet.empty() && seen.insert(meet).second) {
        std::vector<Rational> points;
        meet.for_each([&](std::size_t j) { points.push_back(out.atom_points[j]); });
        out.certificates.push_back({meet, index_set, bk_certificate_system(points)});
      }
    } while (next_combination_lex(index_set, m));
  }
  return out;
}

bool verify_nerve_isomorphism(const SetFamily& f, const SetFamily& g) {
  if (f.sets.size() != g.sets.size()) {
    throw InvalidArgument("verify_nerve_isomorphism: families have " + std::to_string(f.sets.size()) + " and " +
                          std::to_string(g.sets.size()) + " members");
  }
  const std::size_t m = f.sets.size();
  require_nerve_size(m);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    PointSet meet_f = PointSet::full(f.ground_size);
    PointSet meet_g = PointSet::full(g.ground_size);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        meet_f &= f.sets[i];
        meet_g &= g.sets[i];
      }
    }
    if (meet_f.empty() != meet_g.empty()) return false;
  }
  return true;
}

bool verify_bk_certificates(const BKEmbedding& embedding) {
  const auto& pts = embedding.atom_points;
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    if (!(pts[j] < pts[j + 1])) return false;
  }
  for (const auto& cert : embedding.certificates) {
    if (cert.configuration.universe() != pts.size()) return false;
    for (const auto& ineq : cert.inequalities) {
      if (ineq.degree() > 2) return false;
    }
    auto satisfied = [&](const Rational& x, const Rational& y) {
      return std::all_of(cert.inequalities.begin(), cert.inequalities.end(),
                         [&](const PolynomialInequality& q) { return q.holds_at(x, y); });
    };
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (satisfied(pts[j], 0) != cert.configuration.contains(j)) return false;
      // Nothing strictly above the axis.
      if (satisfied(pts[j], Rational(1, 2))) return false;
      if (j + 1 < pts.size() && satisfied((pts[j] + pts[j + 1]) / 2, 0)) return false;
    }
    // The configuration really is the meet of the sets it names.
    PointSet meet = PointSet::full(pts.size());
    for (std::size_t i : cert.realized_by) {
      if (i >= embedding.sets.sets.size()) return false;
      meet &= embedding.sets.sets[i];
    }
    if (meet != cert.configuration) return false;
  }
  return true;
}

}  // namespace convexity
