#pragma once

#include <string>

namespace geogen::llm {

// Writes the recommended LoRA fine-tuning settings as key=value lines,
// ending with the dataset path. Throws std::runtime_error on IO failure.
void emit_finetune_config(const std::string& out_path,
                          const std::string& dataset_path);

// The settings themselves, one "key=value" string per line, without the
// dataset line.
std::string finetune_settings_text();

}  // namespace geogen::llm
