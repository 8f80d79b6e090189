#include <doctest.h>

#include <json.hpp>

#include "geogen/llm/extract.hpp"
#include "geogen/llm/prompt.hpp"

using namespace geogen::llm;
using nlohmann::json;

TEST_CASE("phi3 framing is byte-exact") {
  CHECK(render_raw_prompt(PromptStyle::Phi3, "P") ==
        "<|system|>\n"
        "You are a helpful assistant.<|end|>\n"
        "<|user|>\n"
        "P<|end|>\n"
        "<|assistant|>\n");
}

TEST_CASE("qwen framing is byte-exact") {
  CHECK(render_raw_prompt(PromptStyle::Qwen, "P") ==
        "<|im_start|>system\n"
        "You are a helpful assistant.<|im_end|>\n"
        "<|im_start|>user\n"
        "P<|im_end|>\n"
        "<|im_start|>assistant\n");
}

TEST_CASE("chat-native passes the instruction through untouched") {
  CHECK(render_raw_prompt(PromptStyle::ChatNative, "make a square") ==
        "make a square");
}

TEST_CASE("style names round-trip") {
  for (PromptStyle s :
       {PromptStyle::ChatNative, PromptStyle::Phi3, PromptStyle::Qwen}) {
    auto back = prompt_style_from_name(prompt_style_name(s));
    REQUIRE(back.has_value());
    CHECK(*back == s);
  }
  CHECK_FALSE(prompt_style_from_name("gpt").has_value());
}

TEST_CASE("chat payload carries a messages array") {
  json p = render_payload(PromptStyle::ChatNative, "m1", "draw", 0.25);
  CHECK(p.at("model") == "m1");
  CHECK(p.at("temperature") == doctest::Approx(0.25));
  REQUIRE(p.contains("messages"));
  REQUIRE(p.at("messages").size() == 2);
  CHECK(p.at("messages").at(0).at("role") == "system");
  CHECK(p.at("messages").at(0).at("content") == kSystemMessage);
  CHECK(p.at("messages").at(1).at("role") == "user");
  CHECK(p.at("messages").at(1).at("content") == "draw");
  CHECK_FALSE(p.contains("prompt"));
}

TEST_CASE("raw payloads carry the assembled prompt string") {
  json p = render_payload(PromptStyle::Phi3, "m2", "draw", 0);
  CHECK_FALSE(p.contains("messages"));
  CHECK(p.at("prompt") == render_raw_prompt(PromptStyle::Phi3, "draw"));
}

TEST_CASE("endpoint path matches the payload shape") {
  CHECK(std::string(endpoint_path(PromptStyle::ChatNative)) ==
        "/v1/chat/completions");
  CHECK(std::string(endpoint_path(PromptStyle::Phi3)) == "/v1/completions");
  CHECK(std::string(endpoint_path(PromptStyle::Qwen)) == "/v1/completions");
}

TEST_CASE("completion text is pulled from the right field per style") {
  json chat = {{"choices", {{{"message", {{"content", "hi"}}}}}}};
  auto t1 = completion_text(PromptStyle::ChatNative, chat);
  REQUIRE(t1.has_value());
  CHECK(*t1 == "hi");

  json raw = {{"choices", {{{"text", "raw hi"}}}}};
  auto t2 = completion_text(PromptStyle::Qwen, raw);
  REQUIRE(t2.has_value());
  CHECK(*t2 == "raw hi");

  // wrong shapes yield nullopt instead of throwing
  CHECK_FALSE(completion_text(PromptStyle::ChatNative, raw).has_value());
  CHECK_FALSE(completion_text(PromptStyle::Qwen, chat).has_value());
  CHECK_FALSE(completion_text(PromptStyle::ChatNative, json::object()).has_value());
  CHECK_FALSE(completion_text(PromptStyle::ChatNative,
                              json{{"choices", json::array()}})
                  .has_value());
  CHECK_FALSE(completion_text(PromptStyle::ChatNative, json(42)).has_value());
}

TEST_CASE("extract_geo prefers the first fenced block") {
  std::string completion =
      "Sure! Here's the script:\n"
      "```\n"
      "Point(1) = {0, 0, 0, 1};\n"
      "```\n"
      "And another block:\n"
      "```\n"
      "x = 2;\n"
      "```\n";
  CHECK(extract_geo(completion) == "Point(1) = {0, 0, 0, 1};");
}

TEST_CASE("extract_geo skips a language tag on the fence") {
  std::string completion =
      "```geo\n"
      "Point(1) = {0, 0, 0, 1};\n"
      "Line(1) = {1, 1};\n"
      "```\n";
  CHECK(extract_geo(completion) ==
        "Point(1) = {0, 0, 0, 1};\nLine(1) = {1, 1};");
}

TEST_CASE("extract_geo falls back to the first script-looking line") {
  std::string completion =
      "Here is your geometry, as requested.\n"
      "radius = 2;\n"
      "Point(1) = {radius, 0, 0, 1};\n";
  CHECK(extract_geo(completion) ==
        "radius = 2;\nPoint(1) = {radius, 0, 0, 1};\n");
}

TEST_CASE("extract_geo returns prose untouched when nothing qualifies") {
  std::string prose = "I'm sorry, I can't create CAD files directly.";
  CHECK(extract_geo(prose) == prose);
}

TEST_CASE("extract_geo handles an unterminated fence") {
  std::string completion =
      "```\n"
      "Point(1) = {0, 0, 0, 1};\n";
  std::string out = extract_geo(completion);
  CHECK(out.find("Point(1)") != std::string::npos);
}

TEST_CASE("extract_geo of a bare script is the script") {
  std::string script = "x = 1;\nPoint(1) = {x, 0, 0, 1};\n";
  CHECK(extract_geo(script) == script);
}
