#include <doctest.h>

#include <cmath>

#include "geogen/dataset/rng.hpp"
#include "geogen/dataset/sampler.hpp"

using namespace geogen;
using namespace geogen::dataset;
using kernel::GeometrySpec;
using kernel::Shape;
using kernel::Unit;

TEST_CASE("rng streams are reproducible and respect bounds") {
  Rng a(42), b(42), c(43);
  bool all_equal = true;
  for (int i = 0; i < 1000; ++i) {
    double x = a.uniform();
    double y = b.uniform();
    if (x != y) all_equal = false;
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(all_equal);
  bool diverged = false;
  for (int i = 0; i < 10 && !diverged; ++i)
    diverged = a.uniform() != c.uniform();
  CHECK(diverged);
}

TEST_CASE("rng integer draws cover the inclusive range uniformly enough") {
  Rng rng(7);
  int counts[6] = {};
  for (int i = 0; i < 6000; ++i) {
    std::int64_t v = rng.uniform_int(0, 5);
    REQUIRE(v >= 0);
    REQUIRE(v <= 5);
    counts[v]++;
  }
  for (int c : counts) CHECK(c > 800);

  CHECK(rng.uniform_int(3, 3) == 3);
}

TEST_CASE("rng bounded doubles stay in range") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    double v = rng.uniform(-2.5, 7.5);
    CHECK(v >= -2.5);
    CHECK(v < 7.5);
  }
}

TEST_CASE("sampled specs always satisfy the shape invariants") {
  Rng rng(7);
  DiversityState div;
  for (int i = 0; i < 200; ++i) {
    for (Shape shape : kernel::kAllShapes) {
      GeometrySpec s = sample_spec(shape, rng, div);
      CAPTURE(kernel::shape_name(shape));
      CHECK(kernel::spec_problems(s).empty());
      CHECK(s.mesh_size > 0.0);
    }
  }
}

TEST_CASE("sampled dimensions stay inside the published ranges") {
  Rng rng(11);
  DiversityState div;
  for (int i = 0; i < 300; ++i) {
    GeometrySpec sq = sample_spec(Shape::Square, rng, div);
    double scale = sq.unit == Unit::Cm ? 0.1 : 1.0;
    CHECK(sq.dims["side"] >= 1 * scale - 1e-9);
    CHECK(sq.dims["side"] <= 100 * scale + 1e-9);

    GeometrySpec ci = sample_spec(Shape::Circle, rng, div);
    scale = ci.unit == Unit::Cm ? 0.1 : 1.0;
    CHECK(ci.dims["radius"] >= 0.5 * scale - 1e-9);
    CHECK(ci.dims["radius"] <= 50 * scale + 1e-9);

    GeometrySpec pi = sample_spec(Shape::Pipe, rng, div);
    scale = pi.unit == Unit::Cm ? 0.1 : 1.0;
    CHECK(pi.dims["radius"] <= 25 * scale + 1e-9);
    CHECK(pi.dims["length"] >= 5 * scale - 1e-9);
    CHECK(pi.dims["length"] <= 200 * scale + 1e-9);
  }
}

TEST_CASE("integer and float draws alternate exactly") {
  Rng rng(5);
  DiversityState div;
  auto is_integral = [](double v) { return v == std::floor(v); };
  int ints = 0, floats = 0;
  for (int i = 0; i < 40; ++i) {
    GeometrySpec s = sample_spec(Shape::Square, rng, div);
    (is_integral(s.dims["side"]) ? ints : floats)++;
  }
  CHECK(ints == 20);
  CHECK(floats == 20);
}

TEST_CASE("units and centers alternate exactly") {
  Rng rng(5);
  DiversityState div;
  int cm = 0, origin = 0;
  for (int i = 0; i < 40; ++i) {
    GeometrySpec s = sample_spec(Shape::Circle, rng, div);
    if (s.unit == Unit::Cm) ++cm;
    if (s.center.norm() == 0) ++origin;
  }
  CHECK(cm == 20);
  CHECK(origin == 20);
}

TEST_CASE("explicit centers cycle through all four quadrants") {
  Rng rng(5);
  DiversityState div;
  bool quadrant[4] = {};
  for (int i = 0; i < 16; ++i) {
    GeometrySpec s = sample_spec(Shape::Rectangle, rng, div);
    if (s.center.norm() == 0) continue;
    int q = (s.center.x() > 0 ? (s.center.y() > 0 ? 0 : 3)
                              : (s.center.y() > 0 ? 1 : 2));
    quadrant[q] = true;
  }
  for (bool q : quadrant) CHECK(q);
}

TEST_CASE("orientations step through multiples of 15 degrees") {
  Rng rng(5);
  DiversityState div;
  std::set<double> seen;
  for (int i = 0; i < 24; ++i) {
    GeometrySpec s = sample_spec(Shape::Square, rng, div);
    seen.insert(s.orientation_deg);
    double ratio = s.orientation_deg / 15.0;
    CHECK(ratio == doctest::Approx(std::round(ratio)));
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("semicircle facings cycle through all four directions") {
  Rng rng(5);
  DiversityState div;
  std::set<int> seen;
  for (int i = 0; i < 8; ++i) {
    GeometrySpec s = sample_spec(Shape::SemiCircle, rng, div);
    seen.insert(static_cast<int>(s.facing));
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("diversity counters are tracked per shape") {
  Rng rng(5);
  DiversityState div;
  GeometrySpec sq = sample_spec(Shape::Square, rng, div);
  GeometrySpec ci = sample_spec(Shape::Circle, rng, div);
  // both are first draws for their shape, so both use the integer leg
  CHECK(sq.dims["side"] == std::floor(sq.dims["side"]));
  CHECK(ci.dims["radius"] == std::floor(ci.dims["radius"]));
}

TEST_CASE("same seed reproduces the same spec stream") {
  Rng r1(99), r2(99);
  DiversityState d1, d2;
  for (int i = 0; i < 50; ++i) {
    for (Shape shape : kernel::kAllShapes) {
      GeometrySpec a = sample_spec(shape, r1, d1);
      GeometrySpec b = sample_spec(shape, r2, d2);
      CHECK(a.dims == b.dims);
      CHECK(a.unit == b.unit);
      CHECK(a.center == b.center);
      CHECK(a.orientation_deg == b.orientation_deg);
      CHECK(a.mesh_size == b.mesh_size);
    }
  }
}

TEST_CASE("float draws are two-decimal values, never integral") {
  Rng rng(3);
  DiversityState div;
  for (int i = 0; i < 60; ++i) {
    GeometrySpec s = sample_spec(Shape::Square, rng, div);
    double v = s.dims["side"];
    if (v == std::floor(v)) continue;  // integer leg
    double scaled = v * 100;
    CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-9));
  }
}
