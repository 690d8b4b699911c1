#include "polarnc/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

namespace polarnc::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Code parse_code(const std::vector<std::string>& lines, std::optional<int> length) {
  std::vector<Word> words;
  for (const auto& line : lines) {
    words.push_back(Word::parse(line));
    if (words.back().length() != words.front().length()) {
      throw Error("ragged code: \"" + line + "\" has length " +
                  std::to_string(words.back().length()) + ", expected " +
                  std::to_string(words.front().length()));
    }
  }
  if (words.empty()) {
    if (!length) throw Error("empty code: pass --length to give its word length");
    return Code(*length);
  }
  if (length && *length != words.front().length()) {
    throw Error("words have length " + std::to_string(words.front().length()) + " but --length is " +
                std::to_string(*length));
  }
  return Code(words.front().length(), words);
}

Code read_code(std::istream& in, std::optional<int> length) {
  return parse_code(read_lines(in), length);
}

VariableSpace infer_space(const std::vector<std::string>& terms) {
  int max_index = 0;
  bool doubled = false;
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] != 'X' && t[i] != 'Y') continue;
      if (t[i] == 'Y') doubled = true;
      std::size_t j = i + 1;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      if (j > i + 1) max_index = std::max(max_index, std::stoi(t.substr(i + 1, j - i - 1)));
    }
  }
  if (max_index == 0) throw Error("cannot infer the number of variables; pass --n");
  return VariableSpace{max_index, doubled};
}

std::vector<PseudoMonomial> parse_terms(const std::vector<std::string>& terms, VariableSpace space) {
  std::vector<PseudoMonomial> out;
  for (const auto& t : terms) out.push_back(PseudoMonomial::parse(t, space));
  return out;
}

}  // namespace polarnc::io
