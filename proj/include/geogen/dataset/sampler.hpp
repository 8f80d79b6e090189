#pragma once

#include <map>

#include "geogen/dataset/rng.hpp"
#include "geogen/kernel/spec.hpp"

namespace geogen::dataset {

// Per-shape alternation counters. Forced alternation (rather than independent
// coin flips) keeps integer/float, mm/cm and origin/explicit-center splits
// balanced within one pair per shape over any batch.
struct ShapeDiversity {
  bool next_float = false;
  bool next_cm = false;
  bool next_explicit_center = false;
  int quadrant = 0;          // next quadrant, 0..3
  int orientation_step = 0;  // next multiple of 15 degrees
  int facing_step = 0;       // semicircle facing cycle
};

struct DiversityState {
  ShapeDiversity& for_shape(kernel::Shape shape) { return per_shape[shape]; }

  std::map<kernel::Shape, ShapeDiversity> per_shape;
};

// Draws a complete geometry spec for the shape. Dimensions are drawn in
// canonical key order, then the center, then orientation/facing, then the
// mesh size, so the random stream layout is stable. Ranges follow the
// dataset conventions (sides 1-100, radii 0.5-50, I-beam height 10-100 and
// flange width 5-50, pipe radius 0.5-25, length 5-200, all in mm; cm specs
// use one tenth of each length range). The result always satisfies
// spec_problems() == empty.
kernel::GeometrySpec sample_spec(kernel::Shape shape, Rng& rng,
                                 DiversityState& div);

}  // namespace geogen::dataset
