#include <doctest.h>

#include <chrono>
#include <random>
#include <string>

#include "geogen/geo/validate.hpp"
#include "geogen/kernel/builder.hpp"
#include "geogen/scoring/score.hpp"

using namespace geogen;

namespace {

// Deterministic garbage generator mixing byte noise, GEO token soup, and
// mutated canonical scripts.
class FuzzSource {
 public:
  explicit FuzzSource(std::uint64_t seed) : rng_(seed) {
    kernel::GeometrySpec s;
    s.shape = kernel::Shape::Circle;
    s.dims = {{"radius", 2}};
    s.mesh_size = 0.71;
    canonical_ = kernel::build_geometry(s);
  }

  std::string next() {
    switch (rng_() % 4) {
      case 0: return random_bytes();
      case 1: return token_soup();
      case 2: return mutated_script();
      default: return nesting_bomb();
    }
  }

 private:
  std::string random_bytes() {
    size_t n = rng_() % 400;
    std::string out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i)
      out.push_back(static_cast<char>(rng_() % 256));
    return out;
  }

  std::string token_soup() {
    static const char* kTokens[] = {
        "Point",   "Line",  "Circle", "Spline", "Loop",    "Plane",
        "Surface", "Extrude", "Pi",   "Cos",    "Sin",     "(",
        ")",       "{",     "}",      ",",      ";",       "=",
        "+",       "-",     "*",      "/",      "1",       "0.5",
        "-3e9",    "x",     "//",     "\n",     "1e308",   ".",
    };
    size_t n = rng_() % 80;
    std::string out;
    for (size_t i = 0; i < n; ++i) {
      out += kTokens[rng_() % (sizeof kTokens / sizeof *kTokens)];
      if (rng_() % 3 == 0) out += ' ';
    }
    return out;
  }

  std::string mutated_script() {
    std::string out = canonical_;
    size_t edits = 1 + rng_() % 6;
    for (size_t i = 0; i < edits && !out.empty(); ++i) {
      size_t pos = rng_() % out.size();
      switch (rng_() % 3) {
        case 0: out[pos] = static_cast<char>(rng_() % 256); break;
        case 1: out.erase(pos, std::min<size_t>(out.size() - pos, rng_() % 8)); break;
        default: out.insert(pos, 1, static_cast<char>(rng_() % 256)); break;
      }
    }
    return out;
  }

  std::string nesting_bomb() {
    static const char* kUnits[] = {"(", "{", "((", "{{", "({"};
    std::string out = "x = ";
    const char* unit = kUnits[rng_() % 5];
    size_t depth = rng_() % 3000;
    for (size_t i = 0; i < depth; ++i) out += unit;
    if (rng_() % 2) out += "1";
    return out;
  }

  std::mt19937_64 rng_;
  std::string canonical_;
};

}  // namespace

TEST_CASE("validate survives ten thousand hostile inputs") {
  FuzzSource source(20250815);
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < 10000; ++i) {
    std::string input = source.next();
    auto start = clock::now();
    geo::ValidationReport rep = geo::validate(input);
    auto elapsed = clock::now() - start;
    // model_ok must never be claimed when errors were reported
    if (rep.model_ok) CHECK_FALSE(geo::has_errors(rep.diagnostics));
    bool hung = elapsed > std::chrono::seconds(1);
    if (hung) {
      CAPTURE(i);
      CAPTURE(input.substr(0, 80));
      REQUIRE_FALSE(hung);
    }
  }
  CHECK(true);  // reached the end without a crash
}

TEST_CASE("score survives the same hostility") {
  FuzzSource source(424242);
  kernel::GeometrySpec want;
  want.shape = kernel::Shape::Square;
  want.dims = {{"side", 50}};
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < 10000; ++i) {
    std::string input = source.next();
    auto start = clock::now();
    scoring::ScoreCard card = scoring::score(want, input);
    auto elapsed = clock::now() - start;
    CHECK(card.total() >= 0);
    CHECK(card.total() <= 60);
    bool hung = elapsed > std::chrono::seconds(1);
    if (hung) {
      CAPTURE(i);
      REQUIRE_FALSE(hung);
    }
  }
  CHECK(true);
}

TEST_CASE("deep nesting bombs neither crash nor hang") {
  for (const char* open : {"(", "{"}) {
    std::string bomb = "x = ";
    for (int i = 0; i < 100000; ++i) bomb += open;
    auto start = std::chrono::steady_clock::now();
    geo::ValidationReport rep = geo::validate(bomb);
    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK_FALSE(rep.model_ok);
    CHECK(elapsed < std::chrono::seconds(1));
  }
}

TEST_CASE("the multibody scorer shrugs off garbage too") {
  scoring::MultiBodyExpectation exp;
  kernel::GeometrySpec circle;
  circle.shape = kernel::Shape::Circle;
  circle.dims = {{"radius", 3}};
  kernel::GeometrySpec square;
  square.shape = kernel::Shape::Square;
  square.dims = {{"side", 7}};
  exp.components = {circle, square};
  exp.relation = kernel::Relation::Inside;

  FuzzSource source(777);
  for (int i = 0; i < 2000; ++i) {
    scoring::MultiBodyReport rep = scoring::score_multibody(exp, source.next());
    CHECK(rep.components_expected == 2);
    CHECK(rep.per_component.size() == 2);
  }
  CHECK(true);
}
