#include "ccc/quaternary.hpp"

#include <string>

#include "ccc/error.hpp"

namespace ccc {

char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::kZero: return '0';
    case Symbol::kOne: return '1';
    case Symbol::kI: return 'i';
    case Symbol::kOnePlusI: return 'u';
  }
  return '?';
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case '0': return Symbol::kZero;
    case '1': return Symbol::kOne;
    case 'i': return Symbol::kI;
    case 'u': return Symbol::kOnePlusI;
    default: break;
  }
  throw_error(ErrorCode::kFormat,
              std::string("unknown symbol '") + c + "' (expected 0, 1, i or u)");
}

std::string_view long_name(Symbol s) noexcept {
  switch (s) {
    case Symbol::kZero: return "0";
    case Symbol::kOne: return "1";
    case Symbol::kI: return "i";
    case Symbol::kOnePlusI: return "1+i";
  }
  return "?";
}

int codeword_length(int count) {
  if (count < 2) {
    throw_error(ErrorCode::kInvalidArgument,
                "codeword_length: count must be at least 2, got " +
                    std::to_string(count));
  }
  return (count - 1 + 2) / 3;
}

Codeword encode(int index, int length) {
  if (length < 1) {
    throw_error(ErrorCode::kInvalidArgument,
                "encode: codeword length must be positive, got " +
                    std::to_string(length));
  }
  if (index < 1 || index > codeword_set_size(length)) {
    throw_error(ErrorCode::kInvalidArgument,
                "encode: index " + std::to_string(index) + " outside 1.." +
                    std::to_string(codeword_set_size(length)));
  }
  // Index k sits in group g = (k - 2) / l (0-based, k = 1 is the all-zero
  // head of group 0). Within the group, `filled` right-hand positions have
  // advanced to the next character.
  const int group = index == 1 ? 0 : (index - 2) / length;
  const int filled = index - 1 - group * length;
  const auto low = static_cast<Symbol>(group);
  const auto high = static_cast<Symbol>(group + 1);

  Codeword word(static_cast<std::size_t>(length), low);
  for (int j = length - filled; j < length; ++j) {
    word[static_cast<std::size_t>(j)] = high;
  }
  return word;
}

bool is_staircase(std::span<const Symbol> word) noexcept {
  if (word.empty()) return false;
  const Symbol head = word.front();
  std::size_t j = 0;
  while (j < word.size() && word[j] == head) ++j;
  if (j == word.size()) return true;
  if (head == Symbol::kOnePlusI) return false;
  const auto next = static_cast<Symbol>(static_cast<int>(head) + 1);
  for (; j < word.size(); ++j) {
    if (word[j] != next) return false;
  }
  return true;
}

int decode(std::span<const Symbol> word) {
  if (!is_staircase(word)) {
    throw_error(ErrorCode::kInvalidCodeword,
                "decode: '" + to_string(word) + "' is not a quaternary codeword");
  }
  const int length = static_cast<int>(word.size());
  const int head = static_cast<int>(word.front());
  int advanced = 0;
  for (Symbol s : word) {
    if (static_cast<int>(s) != head) ++advanced;
  }
  return head * length + 1 + advanced;
}

std::string to_string(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(to_char(s));
  return out;
}

std::vector<Symbol> parse_symbols(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(symbol_from_char(c));
  return out;
}

}  // namespace ccc
