// Brute-force reference implementations over bitmasks. They share no code
// with the library beyond PointSet conversion helpers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "convexity/point_set.hpp"
#include "convexity/space.hpp"

namespace oracle {

using Mask = std::uint32_t;
using HullFn = std::function<Mask(Mask)>;

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline Mask to_mask(const convexity::PointSet& s) {
  Mask m = 0;
  for (std::size_t x : s.indices()) m |= Mask{1} << x;
  return m;
}

inline convexity::PointSet to_set(Mask m, std::size_t universe) {
  convexity::PointSet s(universe);
  for (std::size_t x = 0; x < universe; ++x) {
    if (m >> x & 1) s.insert(x);
  }
  return s;
}

inline HullFn library_hull(const convexity::ConvexitySpace& space) {
  return [&space](Mask m) { return to_mask(space.hull(to_set(m, space.size()))); };
}

// Grid coordinates, last axis fastest.
inline std::vector<std::vector<long>> grid_coords(const std::vector<std::size_t>& sides) {
  std::size_t n = 1;
  for (auto s : sides) n *= s;
  std::vector<std::vector<long>> out(n, std::vector<long>(sides.size()));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t a = sides.size(); a-- > 0;) {
      out[i][a] = static_cast<long>(rest % sides[a]);
      rest /= sides[a];
    }
  }
  return out;
}

// Smallest axis-parallel box of grid points.
inline HullFn box_hull(const std::vector<std::size_t>& sides) {
  auto coords = grid_coords(sides);
  return [coords](Mask m) {
    if (m == 0) return Mask{0};
    const std::size_t d = coords.front().size();
    std::vector<long> lo(d, 1L << 30), hi(d, -1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!(m >> i & 1)) continue;
      for (std::size_t a = 0; a < d; ++a) {
        lo[a] = std::min(lo[a], coords[i][a]);
        hi[a] = std::max(hi[a], coords[i][a]);
      }
    }
    Mask out = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      bool in = true;
      for (std::size_t a = 0; a < d; ++a) in = in && lo[a] <= coords[i][a] && coords[i][a] <= hi[a];
      if (in) out |= Mask{1} << i;
    }
    return out;
  };
}

// Planar lattice hull by Caratheodory: p is in conv(Y) iff it lies in a
// triangle, segment or point spanned by Y.
inline HullFn planar_lattice_hull(std::size_t side) {
  auto coords = grid_coords({side, side});
  return [coords](Mask m) {
    std::vector<std::size_t> ys;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (m >> i & 1) ys.push_back(i);
    }
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
      return (coords[a][0] - coords[o][0]) * (coords[b][1] - coords[o][1]) -
             (coords[a][1] - coords[o][1]) * (coords[b][0] - coords[o][0]);
    };
    auto on_segment = [&](std::size_t p, std::size_t a, std::size_t b) {
      return cross(a, b, p) == 0 && std::min(coords[a][0], coords[b][0]) <= coords[p][0] &&
             coords[p][0] <= std::max(coords[a][0], coords[b][0]) && std::min(coords[a][1], coords[b][1]) <= coords[p][1] &&
             coords[p][1] <= std::max(coords[a][1], coords[b][1]);
    };
    Mask out = 0;
    for (std::size_t p = 0; p < coords.size(); ++p) {
      bool in = false;
      for (std::size_t a = 0; a < ys.size() && !in; ++a) {
        for (std::size_t b = a; b < ys.size() && !in; ++b) {
          if (on_segment(p, ys[a], ys[b])) in = true;
          for (std::size_t c = b + 1; c < ys.size() && !in; ++c) {
            const long s1 = cross(ys[a], ys[b], p), s2 = cross(ys[b], ys[c], p), s3 = cross(ys[c], ys[a], p);
            if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) {
              if (cross(ys[a], ys[b], ys[c]) != 0) in = true;
            }
          }
        }
      }
      if (in) out |= Mask{1} << p;
    }
    return out;
  };
}

// Intersection of all members containing y.
inline HullFn family_hull(const std::vector<Mask>& convex, std::size_t n) {
  return [convex, n](Mask y) {
    Mask out = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (Mask c : convex) {
      if ((c & y) == y) out &= c;
    }
    return out;
  };
}

inline std::vector<Mask> convex_sets(const HullFn& hull, std::size_t n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (hull(m) == m) out.push_back(m);
  }
  return out;
}

inline std::vector<Mask> halfspaces(const HullFn& hull, std::size_t n) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m) {
    if (hull(m) == m && hull(full & ~m) == (full & ~m)) out.push_back(m);
  }
  return out;
}

inline bool has_radon_partition(const HullFn& hull, Mask y) {
  for (Mask a = (y - 1) & y; a != 0; a = (a - 1) & y) {
    if (hull(a) & hull(y & ~a)) return true;
  }
  return false;
}

inline std::optional<std::size_t> radon_number(const HullFn& hull, std::size_t n) {
  std::vector<bool> fails(n + 1, false);
  for (Mask y = 1; y < (Mask{1} << n); ++y) {
    if (!has_radon_partition(hull, y)) fails[popcount(y)] = true;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (!fails[k]) return k;
  }
  return std::nullopt;
}

inline std::size_t helly_number(const HullFn& hull, std::size_t n) {
  std::size_t best = 1;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    Mask meet = (Mask{1} << n) - 1;
    for (std::size_t x = 0; x < n; ++x) {
      if (s >> x & 1) meet &= hull(s & ~(Mask{1} << x));
    }
    if (meet == 0) best = std::max<std::size_t>(best, popcount(s));
  }
  return best;
}

// Helly number from the definition: the largest family of convex sets that
// is non-intersecting while every proper subfamily intersects.
inline std::size_t helly_number_by_families(const std::vector<Mask>& convex, std::size_t n) {
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> cands;
  for (Mask c : convex) {
    if (c != full) cands.push_back(c);
  }
  std::size_t best = 0;
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    // Minimal and non-intersecting?
    Mask meet = full;
    for (Mask c : chosen) meet &= c;
    if (!chosen.empty() && meet == 0) {
      bool minimal = true;
      for (std::size_t i = 0; i < chosen.size() && minimal; ++i) {
        Mask rest = full;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
          if (j != i) rest &= chosen[j];
        }
        minimal = rest != 0;
      }
      if (minimal) best = std::max(best, chosen.size());
      return;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      // A member that does not shrink the meet can be dropped again.
      if ((meet & cands[i]) == meet) continue;
      chosen.push_back(cands[i]);
      go(i + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

inline std::size_t dual_vc(const std::vector<Mask>& family, std::size_t n) {
  std::size_t best = 0;
  const std::size_t m = family.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<Mask> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick >> i & 1) chosen.push_back(family[i]);
    }
    if (chosen.size() <= best || (std::size_t{1} << chosen.size()) > n) continue;
    std::vector<bool> seen(std::size_t{1} << chosen.size(), false);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t code = 0;
      for (std::size_t b = 0; b < chosen.size(); ++b) {
        if (chosen[b] >> x & 1) code |= std::size_t{1} << b;
      }
      seen[code] = true;
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) best = chosen.size();
  }
  return best;
}

inline std::size_t vc(const std::vector<Mask>& family, std::size_t n) {
  std::size_t best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (static_cast<std::size_t>(popcount(s)) <= best) continue;
    std::vector<Mask> traces;
    for (Mask f : family) traces.push_back(f & s);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    if (traces.size() == (std::size_t{1} << popcount(s))) best = popcount(s);
  }
  return best;
}

inline std::size_t dual_shatter(const std::vector<Mask>& family, std::size_t n, std::size_t m) {
  std::size_t best = 0;
  std::vector<bool> pick(family.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
  do {
    std::vector<std::uint64_t> codes;
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t code = 0, bit = 0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (pick[i]) {
          if (family[i] >> x & 1) code |= std::uint64_t{1} << bit;
          ++bit;
        }
      }
      codes.push_back(code);
    }
    std::sort(codes.begin(), codes.end());
    best = std::max<std::size_t>(best, std::unique(codes.begin(), codes.end()) - codes.begin());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

inline std::uint64_t intersecting_tuples(const std::vector<Mask>& family, std::size_t k) {
  std::uint64_t count = 0;
  const std::size_t n = family.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
    if (static_cast<std::size_t>(__builtin_popcountll(pick)) != k) continue;
    Mask meet = ~Mask{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (pick >> i & 1) meet &= family[i];
    }
    if (meet) ++count;
  }
  return count;
}

inline std::size_t max_intersecting(const std::vector<Mask>& family) {
  std::size_t best = 0;
  const std::size_t n = family.size();
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << n); ++pick) {
    Mask meet = ~Mask{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (pick >> i & 1) meet &= family[i];
    }
    if (meet) best = std::max<std::size_t>(best, __builtin_popcountll(pick));
  }
  return best;
}

// Complete partite copies: edges are tuples, `kept(tuple)` says whether an
// edge survives. Classes are enumerated as bitmasks of size s.
struct PartiteCount {
  std::uint64_t copies = 0;
  std::optional<std::vector<Mask>> first;  // lexicographically first by sorted positions
};

inline std::vector<Mask> masks_of_size(std::size_t t, std::size_t s) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << t); ++m) {
    if (static_cast<std::size_t>(popcount(m)) == s) out.push_back(m);
  }
  auto positions = [](Mask m) {
    std::vector<int> p;
    for (int i = 0; i < 32; ++i) {
      if (m >> i & 1) p.push_back(i);
    }
    return p;
  };
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) { return positions(a) < positions(b); });
  return out;
}

inline PartiteCount partite_copies(const std::vector<std::size_t>& sizes,
                                   const std::function<bool(const std::vector<std::size_t>&)>& kept, std::size_t s) {
  const std::size_t k = sizes.size();
  std::vector<std::vector<Mask>> options;
  for (std::size_t c = 0; c < k; ++c) options.push_back(masks_of_size(sizes[c], s));
  PartiteCount out;
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    if (options[c].empty()) return out;
  }
  while (true) {
    std::vector<Mask> chosen(k);
    for (std::size_t c = 0; c < k; ++c) chosen[c] = options[c][digit[c]];
    // All transversals kept?
    bool ok = true;
    std::vector<std::size_t> tuple(k, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
      if (!ok) return;
      if (c == k) {
        ok = kept(tuple);
        return;
      }
      for (std::size_t p = 0; p < sizes[c]; ++p) {
        if (chosen[c] >> p & 1) {
          tuple[c] = p;
          walk(c + 1);
        }
      }
    };
    walk(0);
    if (ok) {
      ++out.copies;
      if (!out.first) out.first = chosen;
    }
    std::size_t c = k;
    while (c > 0) {
      --c;
      if (++digit[c] < options[c].size()) break;
      digit[c] = 0;
      if (c == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace oracle
