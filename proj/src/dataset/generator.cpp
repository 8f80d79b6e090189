#include "geogen/dataset/generator.hpp"

#include <fstream>

#include "geogen/dataset/sampler.hpp"
#include "geogen/dataset/templates.hpp"
#include "geogen/io/json_io.hpp"
#include "geogen/kernel/builder.hpp"

namespace geogen::dataset {

using kernel::GeometrySpec;
using kernel::Shape;

namespace {

struct Category {
  const char* name;
  std::vector<Shape> shapes;
};

const std::vector<Category>& categories() {
  static const std::vector<Category> cats = {
      {"basic", {Shape::Square, Shape::Rectangle}},
      {"curved", {Shape::Circle, Shape::SemiCircle}},
      {"structural", {Shape::IBeam}},
      {"advanced", {Shape::Pipe, Shape::BentPipe}},
  };
  return cats;
}

// Placeholder -> requested-parameter name for the pair's metadata.
void fill_requested(GeometrySpec& spec, const InstructionTemplate& tmpl) {
  for (const std::string& name : placeholder_names(tmpl.pattern)) {
    if (name == "unit") continue;
    if (name == "radius")
      spec.requested.insert(spec.shape == Shape::BentPipe ? "pipeRadius"
                                                          : "radius");
    else if (name == "orientation")
      spec.requested.insert(spec.shape == Shape::SemiCircle ? "facing"
                                                            : "orientation");
    else
      spec.requested.insert(name);
  }
}

}  // namespace

std::string sidecar_path(const std::string& dataset_path) {
  std::string base = dataset_path;
  size_t dot = base.find_last_of('.');
  size_t slash = base.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
    base = base.substr(0, dot);
  return base + ".meta.jsonl";
}

std::vector<InstructionPair> generate_pairs(const GenerateConfig& config) {
  std::vector<InstructionPair> pairs;
  Rng rng(config.seed);
  DiversityState div;
  std::map<Shape, int> shape_counter;
  int index = 0;

  for (const Category& cat : categories()) {
    for (int i = 0; i < config.pairs_per_category; ++i) {
      Shape shape = cat.shapes[i % cat.shapes.size()];
      const auto& tmpls = templates_for(shape);
      const InstructionTemplate& tmpl =
          tmpls[shape_counter[shape] % tmpls.size()];
      shape_counter[shape]++;

      GeometrySpec spec = sample_spec(shape, rng, div);
      if (!tmpl.has_placeholder("center")) spec.center = {0, 0, 0};
      if (!tmpl.has_placeholder("orientation") && shape != Shape::SemiCircle)
        spec.orientation_deg = 0.0;
      fill_requested(spec, tmpl);

      InstructionPair pair;
      pair.instruction = render_instruction(tmpl, spec);
      pair.output = kernel::build_geometry(spec);
      pair.meta = {spec, tmpl.id, config.seed, cat.name, index};

      QCReport qc = qc_validate(pair.instruction, pair.output, spec);
      if (!qc.all_ok()) {
        std::string what = "quality control failed for pair " +
                           std::to_string(index) + " (" +
                           kernel::shape_name(shape) + ", template " +
                           std::to_string(tmpl.id) + ")";
        for (const auto& d : qc.details) what += "; " + d;
        throw QCFailure(what, std::move(qc));
      }
      pairs.push_back(std::move(pair));
      ++index;
    }
  }
  return pairs;
}

DatasetSummary generate_dataset(const GenerateConfig& config) {
  std::vector<InstructionPair> pairs = generate_pairs(config);

  io::json dataset = io::json::array();
  for (const auto& pair : pairs)
    dataset.push_back(
        io::json{{"instruction", pair.instruction}, {"output", pair.output}});
  std::string dataset_text = dataset.dump(2) + "\n";

  std::string meta_text;
  for (const auto& pair : pairs) {
    io::json line{{"index", pair.meta.index},
                  {"category", pair.meta.category},
                  {"shape", kernel::shape_name(pair.meta.spec.shape)},
                  {"templateId", pair.meta.template_id},
                  {"seed", pair.meta.seed},
                  {"spec", io::spec_json(pair.meta.spec)}};
    meta_text += line.dump() + "\n";
  }

  {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + config.output_path);
    out << dataset_text;
  }
  {
    std::string side = sidecar_path(config.output_path);
    std::ofstream out(side, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + side);
    out << meta_text;
  }

  DatasetSummary summary;
  summary.total = static_cast<int>(pairs.size());
  for (const auto& pair : pairs) {
    summary.per_category[pair.meta.category]++;
    summary.per_shape[kernel::shape_name(pair.meta.spec.shape)]++;
  }
  return summary;
}

}  // namespace geogen::dataset
