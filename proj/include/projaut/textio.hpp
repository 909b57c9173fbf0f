#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "projaut/action.hpp"

namespace projaut {

// Line-oriented action file format, exact literals only:
//
//   # comment
//   genus 3
//   base fuchsian            # or: other
//   generator J
//   matrix
//   1 0 0 0 0 0
//   ...                      # 3g-3 rows of 3g-3 entries
//   translation 0 0 0 0 0 0  # optional; omitted means zero
//   generator R1 monomial
//   modulus 8
//   exponents 2 3 4 5 6 0
//   signs + + + + + -
//
// Either all generators are matrix generators or all are monomial ones.
ActionGroup read_action_group(std::istream& in);
ActionGroup read_action_group_file(const std::string& path);
ActionGroup parse_action_group(const std::string& text);

void write_action_group(std::ostream& out, const ActionGroup& group);
std::string action_group_to_text(const ActionGroup& group);

// Comma- or space-separated exact coefficients, constant term first.
std::vector<Scalar> parse_scalar_list(const std::string& text);

}  // namespace projaut
