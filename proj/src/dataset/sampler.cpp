#include "geogen/dataset/sampler.hpp"

#include <cmath>

#include "geogen/support/numeric.hpp"

namespace geogen::dataset {

using kernel::Facing;
using kernel::GeometrySpec;
using kernel::Shape;
using kernel::Unit;

namespace {

bool is_integral(double v) { return v == std::floor(v); }

class DimSampler {
 public:
  DimSampler(Rng& rng, bool use_float, double unit_scale)
      : rng_(rng), use_float_(use_float), scale_(unit_scale) {}

  // Draw from [lo, hi] (given in mm) scaled to the active unit. min_int
  // tightens the integer-mode lower bound where the scaled range would
  // otherwise violate a shape constraint.
  double length(double lo, double hi, std::int64_t min_int = 1) {
    return draw(lo * scale_, hi * scale_, min_int);
  }

  // Angles are unit-independent.
  double angle(double lo, double hi) { return draw(lo, hi, 1); }

  double coordinate(double lo, double hi, std::int64_t min_int = 0) {
    return draw(lo * scale_, hi * scale_, min_int);
  }

 private:
  double draw(double lo, double hi, std::int64_t min_int) {
    if (!use_float_) {
      auto ilo = std::max<std::int64_t>(
          static_cast<std::int64_t>(std::ceil(lo - 1e-9)), min_int);
      auto ihi = static_cast<std::int64_t>(std::floor(hi + 1e-9));
      if (ihi < ilo) ihi = ilo;
      return static_cast<double>(rng_.uniform_int(ilo, ihi));
    }
    double v;
    do {
      v = std::max(round2(rng_.uniform(lo, hi)), 0.1);
    } while (is_integral(v));
    return v;
  }

  Rng& rng_;
  bool use_float_;
  double scale_;
};

Eigen::Vector3d sample_center(DimSampler& ds, ShapeDiversity& d, bool with_z) {
  bool explicit_center = d.next_explicit_center;
  d.next_explicit_center = !d.next_explicit_center;
  if (!explicit_center) return {0, 0, 0};
  int q = d.quadrant;
  d.quadrant = (d.quadrant + 1) % 4;
  double sx = (q == 0 || q == 3) ? 1.0 : -1.0;
  double sy = (q == 0 || q == 1) ? 1.0 : -1.0;
  double x = sx * ds.coordinate(1, 50, 1);
  double y = sy * ds.coordinate(1, 50, 1);
  double z = with_z ? ds.coordinate(0, 50, 0) : 0.0;
  return {x, y, z};
}

}  // namespace

GeometrySpec sample_spec(Shape shape, Rng& rng, DiversityState& div) {
  ShapeDiversity& d = div.for_shape(shape);
  bool use_float = d.next_float;
  d.next_float = !d.next_float;
  Unit unit = d.next_cm ? Unit::Cm : Unit::Mm;
  d.next_cm = !d.next_cm;
  double scale = unit == Unit::Cm ? 0.1 : 1.0;

  GeometrySpec spec;
  spec.shape = shape;
  spec.unit = unit;
  DimSampler ds(rng, use_float, scale);

  switch (shape) {
    case Shape::Square:
      spec.dims["side"] = ds.length(1, 100);
      break;
    case Shape::Rectangle:
      spec.dims["width"] = ds.length(1, 100);
      spec.dims["height"] = ds.length(1, 100);
      break;
    case Shape::Circle:
    case Shape::SemiCircle:
      spec.dims["radius"] = ds.length(0.5, 50);
      break;
    case Shape::IBeam: {
      double h = ds.length(10, 100, 3);
      double b = ds.length(5, 50, 2);
      spec.dims["h"] = h;
      spec.dims["b"] = b;
      spec.dims["tw"] = ds.length(0.1 * b / scale, 0.8 * b / scale);
      spec.dims["tf"] = ds.length(0.05 * h / scale, 0.45 * h / scale);
      break;
    }
    case Shape::Pipe:
      spec.dims["radius"] = ds.length(0.5, 25);
      spec.dims["length"] = ds.length(5, 200);
      break;
    case Shape::BentPipe: {
      double r = ds.length(0.5, 25);
      spec.dims["pipeRadius"] = r;
      spec.dims["bendRadius"] = ds.length(2.0 * r / scale, 5.0 * r / scale);
      spec.dims["bendAngle"] = ds.angle(15, 180);
      break;
    }
  }

  bool with_z = shape == Shape::Pipe || shape == Shape::BentPipe;
  spec.center = sample_center(ds, d, with_z);

  if (shape == Shape::Square || shape == Shape::Rectangle ||
      shape == Shape::IBeam) {
    spec.orientation_deg = 15.0 * (d.orientation_step % 24);
    d.orientation_step++;
  } else if (shape == Shape::SemiCircle) {
    static const Facing kCycle[] = {Facing::Up, Facing::Right, Facing::Down,
                                    Facing::Left};
    spec.facing = kCycle[d.facing_step % 4];
    d.facing_step++;
  }

  double min_dim = 1e300;
  for (const auto& [key, value] : spec.dims)
    if (key != "bendAngle") min_dim = std::min(min_dim, value);
  spec.mesh_size = std::max(round2(rng.uniform(0.05, 0.5) * min_dim), 0.01);
  return spec;
}

}  // namespace geogen::dataset
