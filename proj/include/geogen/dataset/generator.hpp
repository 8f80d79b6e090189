#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "geogen/dataset/qc.hpp"
#include "geogen/kernel/spec.hpp"

namespace geogen::dataset {

struct GenerateConfig {
  std::uint64_t seed = 0;
  int pairs_per_category = 120;
  std::string output_path;  // dataset JSON; sidecar written next to it
};

struct PairMeta {
  kernel::GeometrySpec spec;
  int template_id = 0;
  std::uint64_t seed = 0;
  std::string category;
  int index = 0;  // position in the dataset file
};

struct InstructionPair {
  std::string instruction;
  std::string output;
  PairMeta meta;
};

struct QCFailure : std::runtime_error {
  QCFailure(const std::string& what, QCReport rep)
      : std::runtime_error(what), report(std::move(rep)) {}
  QCReport report;
};

struct DatasetSummary {
  int total = 0;
  std::map<std::string, int> per_category;
  std::map<std::string, int> per_shape;
};

// Deterministically produces the full batch, QC-checking every pair.
// Throws QCFailure on the first pair that fails (a generator bug).
std::vector<InstructionPair> generate_pairs(const GenerateConfig& config);

// generate_pairs + serialization: a JSON array of {"instruction", "output"}
// objects at output_path, and a .meta.jsonl sidecar with per-pair
// provenance. No files are written unless every pair passes QC.
DatasetSummary generate_dataset(const GenerateConfig& config);

// Path of the sidecar for a dataset path ("x.json" -> "x.meta.jsonl").
std::string sidecar_path(const std::string& dataset_path);

}  // namespace geogen::dataset
