#include "geogen/llm/finetune.hpp"

#include <fstream>
#include <stdexcept>

namespace geogen::llm {

std::string finetune_settings_text() {
  return
      "lora_r=8\n"
      "lora_alpha=16\n"
      "epochs=3\n"
      "min_lr=1.0e-05\n"
      "val_split_fraction=0.1\n";
}

void emit_finetune_config(const std::string& out_path,
                          const std::string& dataset_path) {
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << finetune_settings_text();
  out << "dataset=" << dataset_path << '\n';
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
}

}  // namespace geogen::llm
