#pragma once

#include "convexity/builtin.hpp"

namespace convexity {

class LatticeOracle final : public HullOracle {
 public:
  explicit LatticeOracle(GridShape grid);
  PointSet hull(const PointSet& y) const override;

 private:
  GridShape grid_;
};

}  // namespace convexity
