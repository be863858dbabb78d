#pragma once

#include <cstddef>

#include "qiso/isoindex.hpp"

namespace qiso {

// One step of an experiment sweep: the rows behind the trajectory plots.
struct TrajectoryRecord {
  std::size_t step;
  double error_param;
  IsoIndex index;
  TriangleCoord coord;
  double success_prob;
};

}  // namespace qiso
