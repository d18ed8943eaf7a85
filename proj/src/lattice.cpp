#include <algorithm>
#include <array>

#include "convexity/builtin.hpp"
#include "convexity/errors.hpp"
#include "lattice_oracle.hpp"

namespace convexity {

bool point_in_rational_hull(const RationalVector& p, std::span<const RationalVector> points) {
  const std::size_t d = p.size();
  for (const auto& y : points) {
    if (y.size() != d) {
      throw InvalidArgument("point_in_rational_hull: dimension mismatch (" + std::to_string(y.size()) + " vs " +
                            std::to_string(d) + ")");
    }
  }
  if (points.empty()) return false;

  // Rows: one per coordinate plus the sum-to-one row. Columns: one weight per
  // point, one artificial per row, then the right-hand side.
  const std::size_t n = points.size();
  const std::size_t rows = d + 1;
  const std::size_t cols = n + rows;
  std::vector<RationalVector> t(rows, RationalVector(cols + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = points[j][r];
    t[r][cols] = p[r];
  }
  for (std::size_t j = 0; j < n; ++j) t[d][j] = 1;
  t[d][cols] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (t[r][cols] < 0) {
      for (auto& v : t[r]) v = -v;
    }
    t[r][n + r] = 1;
    basis[r] = n + r;
  }

  // Phase-one objective: minimize the sum of artificials. `cost` holds the
  // reduced costs; cost[cols] is minus the current objective value.
  RationalVector cost(cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[r][j];
    cost[cols] -= t[r][cols];
  }

  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][entering];
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == rows) break;  // unbounded direction; cannot happen for phase one

    const Rational pivot = t[leaving][entering];
    for (auto& v : t[leaving]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      const Rational factor = t[r][entering];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= factor * t[leaving][j];
    }
    if (cost[entering] != 0) {
      const Rational factor = cost[entering];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= factor * t[leaving][j];
    }
    basis[leaving] = entering;
  }
  return cost[cols] == 0;
}

namespace lattice_detail {

namespace {

using Point2 = std::array<std::int64_t, 2>;

std::int64_t cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise hull vertices without collinear points; one or two
// points for degenerate input.
std::vector<Point2> monotone_chain(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool in_polygon(const std::vector<Point2>& hull, const Point2& q) {
  if (hull.size() == 1) return hull[0] == q;
  if (hull.size() == 2) {
    if (cross(hull[0], hull[1], q) != 0) return false;
    return std::min(hull[0][0], hull[1][0]) <= q[0] && q[0] <= std::max(hull[0][0], hull[1][0]) &&
           std::min(hull[0][1], hull[1][1]) <= q[1] && q[1] <= std::max(hull[0][1], hull[1][1]);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], q) < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<bool> planar_hull_members(const GridShape& grid, const PointSet& y) {
  std::vector<bool> out(grid.size(), false);
  std::vector<Point2> pts;
  y.for_each([&](std::size_t i) {
    const auto c = grid.coords(i);
    pts.push_back({c[0], c[1]});
  });
  if (pts.empty()) return out;
  const auto hull = monotone_chain(pts);
  for (std::size_t q = 0; q < grid.size(); ++q) {
    const auto c = grid.coords(q);
    out[q] = y.contains(q) || in_polygon(hull, {c[0], c[1]});
  }
  return out;
}

std::vector<bool> general_hull_members(const GridShape& grid, const PointSet& y) {
  std::vector<bool> out(grid.size(), false);
  std::vector<std::vector<std::int64_t>> pts;
  y.for_each([&](std::size_t i) { pts.push_back(grid.coords(i)); });
  if (pts.empty()) return out;
  const std::size_t d = grid.dimension();

  for (std::size_t q = 0; q < grid.size(); ++q) {
    if (y.contains(q)) {
      out[q] = true;
      continue;
    }
    const auto target = grid.coords(q);
    // If q sits on the minimum (maximum) of some coordinate over the
    // candidates, any convex combination for q uses only candidates on that
    // face. Restrict until stable.
    std::vector<const std::vector<std::int64_t>*> cand;
    for (const auto& p : pts) cand.push_back(&p);
    bool outside = false;
    bool changed = true;
    while (changed && !outside) {
      changed = false;
      for (std::size_t i = 0; i < d && !outside; ++i) {
        std::int64_t lo = (*cand[0])[i];
        std::int64_t hi = lo;
        for (const auto* p : cand) {
          lo = std::min(lo, (*p)[i]);
          hi = std::max(hi, (*p)[i]);
        }
        if (target[i] < lo || target[i] > hi) {
          outside = true;
        } else if (lo != hi && (target[i] == lo || target[i] == hi)) {
          std::erase_if(cand, [&](const auto* p) { return (*p)[i] != target[i]; });
          changed = true;
        }
      }
    }
    if (outside) continue;
    if (cand.size() == 1) {
      out[q] = (*cand[0] == target);
      continue;
    }
    RationalVector target_q(target.begin(), target.end());
    std::vector<RationalVector> cand_q;
    for (const auto* p : cand) cand_q.emplace_back(p->begin(), p->end());
    out[q] = point_in_rational_hull(target_q, cand_q);
  }
  return out;
}

}  // namespace lattice_detail

LatticeOracle::LatticeOracle(GridShape grid) : grid_(std::move(grid)) {}

PointSet LatticeOracle::hull(const PointSet& y) const {
  PointSet out(grid_.size());
  if (y.empty()) return out;
  if (grid_.dimension() == 1) {
    for (std::size_t i = *y.first(), last = y.indices().back(); i <= last; ++i) out.insert(i);
    return out;
  }
  const auto members = grid_.dimension() == 2 ? lattice_detail::planar_hull_members(grid_, y)
                                              : lattice_detail::general_hull_members(grid_, y);
  for (std::size_t q = 0; q < members.size(); ++q) {
    if (members[q]) out.insert(q);
  }
  return out;
}

}  // namespace convexity
