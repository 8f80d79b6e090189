#pragma once

#include <json.hpp>
#include <optional>
#include <string>

namespace geogen::llm {

// How an instruction is framed on the wire. ChatNative sends a messages
// array to a chat endpoint; Phi3 and Qwen assemble the model's raw token
// framing and use a plain completions endpoint.
enum class PromptStyle { ChatNative, Phi3, Qwen };

const char* prompt_style_name(PromptStyle style);
std::optional<PromptStyle> prompt_style_from_name(const std::string& name);

inline constexpr const char* kSystemMessage = "You are a helpful assistant.";

// Raw token framing for Phi3/Qwen with the assistant slot left open.
// ChatNative has no raw framing and returns the instruction unchanged.
std::string render_raw_prompt(PromptStyle style, const std::string& instruction);

// Request body for a chat-completions-compatible endpoint.
nlohmann::json render_payload(PromptStyle style, const std::string& model,
                              const std::string& instruction, double temperature);

// Endpoint path matching the payload shape.
const char* endpoint_path(PromptStyle style);

// Completion text from a response body; nullopt when the shape is wrong.
std::optional<std::string> completion_text(PromptStyle style,
                                           const nlohmann::json& response);

}  // namespace geogen::llm
