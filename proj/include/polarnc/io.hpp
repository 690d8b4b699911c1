#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polarnc/code.hpp"
#include "polarnc/ideal.hpp"

namespace polarnc::io {

/// Non-empty lines with '#' comments and surrounding whitespace removed.
std::vector<std::string> read_lines(std::istream& in);

/// One word per line; '|' separators are accepted. `length` is required
/// when the file holds no words and must agree with the words otherwise.
Code read_code(std::istream& in, std::optional<int> length = std::nullopt);
Code parse_code(const std::vector<std::string>& lines, std::optional<int> length = std::nullopt);

/// The smallest space naming every variable in the terms; any Y makes it doubled.
VariableSpace infer_space(const std::vector<std::string>& terms);

std::vector<PseudoMonomial> parse_terms(const std::vector<std::string>& terms, VariableSpace space);

}  // namespace polarnc::io
