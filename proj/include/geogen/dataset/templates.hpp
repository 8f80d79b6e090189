#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geogen/kernel/spec.hpp"

namespace geogen::dataset {

enum class TemplateStyle { Command, Request, Question, Technical, Detailed };

const char* template_style_name(TemplateStyle s);

// Instruction pattern with {placeholder} slots. Placeholders are drawn from
// {radius, side, width, height, h, b, tw, tf, length, bendAngle, unit,
// center, orientation, mesh_size}. For pipes {radius} names the pipe radius;
// for semicircles {orientation} names the facing direction word.
struct InstructionTemplate {
  kernel::Shape shape;
  int id = 0;  // 1-based within the shape
  std::string pattern;
  TemplateStyle style;

  bool has_placeholder(const std::string& name) const;
};

// Exactly 8 templates per shape, ids 1..8.
const std::vector<InstructionTemplate>& templates_for(kernel::Shape shape);

struct MissingPlaceholderValue : std::runtime_error {
  explicit MissingPlaceholderValue(const std::string& what)
      : std::runtime_error(what) {}
};

// Placeholder names appearing in a pattern, in order of first appearance.
std::vector<std::string> placeholder_names(const std::string& pattern);

// Substitutes spec values into the template. Integers render without a
// decimal point, other values with two decimals; a zero center renders as
// "the origin". Throws MissingPlaceholderValue when the spec lacks a value
// the template needs.
std::string render_instruction(const InstructionTemplate& tmpl,
                               const kernel::GeometrySpec& spec);

}  // namespace geogen::dataset
