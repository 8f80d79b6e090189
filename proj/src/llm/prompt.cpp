#include "geogen/llm/prompt.hpp"

namespace geogen::llm {

const char* prompt_style_name(PromptStyle style) {
  switch (style) {
    case PromptStyle::ChatNative: return "chat-native";
    case PromptStyle::Phi3: return "phi3";
    case PromptStyle::Qwen: return "qwen";
  }
  return "?";
}

std::optional<PromptStyle> prompt_style_from_name(const std::string& name) {
  for (PromptStyle s : {PromptStyle::ChatNative, PromptStyle::Phi3, PromptStyle::Qwen})
    if (name == prompt_style_name(s)) return s;
  return std::nullopt;
}

std::string render_raw_prompt(PromptStyle style, const std::string& instruction) {
  switch (style) {
    case PromptStyle::Phi3:
      return std::string("<|system|>\n") + kSystemMessage + "<|end|>\n<|user|>\n" +
             instruction + "<|end|>\n<|assistant|>\n";
    case PromptStyle::Qwen:
      return std::string("<|im_start|>system\n") + kSystemMessage +
             "<|im_end|>\n<|im_start|>user\n" + instruction +
             "<|im_end|>\n<|im_start|>assistant\n";
    case PromptStyle::ChatNative:
      return instruction;
  }
  return instruction;
}

nlohmann::json render_payload(PromptStyle style, const std::string& model,
                              const std::string& instruction,
                              double temperature) {
  if (style == PromptStyle::ChatNative) {
    return nlohmann::json{
        {"model", model},
        {"messages",
         nlohmann::json::array(
             {nlohmann::json{{"role", "system"}, {"content", kSystemMessage}},
              nlohmann::json{{"role", "user"}, {"content", instruction}}})},
        {"temperature", temperature}};
  }
  return nlohmann::json{{"model", model},
                        {"prompt", render_raw_prompt(style, instruction)},
                        {"temperature", temperature}};
}

const char* endpoint_path(PromptStyle style) {
  return style == PromptStyle::ChatNative ? "/v1/chat/completions"
                                          : "/v1/completions";
}

std::optional<std::string> completion_text(PromptStyle style,
                                           const nlohmann::json& response) {
  if (!response.is_object() || !response.contains("choices") ||
      !response.at("choices").is_array() || response.at("choices").empty())
    return std::nullopt;
  const nlohmann::json& choice = response.at("choices").at(0);
  if (style == PromptStyle::ChatNative) {
    if (!choice.contains("message") || !choice.at("message").is_object())
      return std::nullopt;
    const nlohmann::json& msg = choice.at("message");
    if (!msg.contains("content") || !msg.at("content").is_string())
      return std::nullopt;
    return msg.at("content").get<std::string>();
  }
  if (!choice.contains("text") || !choice.at("text").is_string())
    return std::nullopt;
  return choice.at("text").get<std::string>();
}

}  // namespace geogen::llm
