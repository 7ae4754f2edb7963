#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

/// One element of the input alphabet {0, 1, i, 1+i}. The underlying value
/// packs the real bit in bit 0 and the imaginary bit in bit 1, so the four
/// characters are ordered the same way the encoding walks through them.
enum class Symbol : std::uint8_t {
  kZero = 0,      // 0
  kOne = 1,       // 1
  kI = 2,         // i
  kOnePlusI = 3,  // 1+i
};

constexpr int re_bit(Symbol s) noexcept {
  return static_cast<int>(s) & 1;
}
constexpr int im_bit(Symbol s) noexcept {
  return (static_cast<int>(s) >> 1) & 1;
}
constexpr Symbol make_symbol(int re, int im) noexcept {
  return static_cast<Symbol>((re & 1) | ((im & 1) << 1));
}

/// Single-character rendering: `0`, `1`, `i`, `u` (u = 1+i).
char to_char(Symbol s) noexcept;
/// Inverse of to_char. Throws Error{kFormat} on any other character.
Symbol symbol_from_char(char c);
/// Long form used in tables: `0`, `1`, `i`, `1+i`.
std::string_view long_name(Symbol s) noexcept;

using Codeword = std::vector<Symbol>;

/// Shortest codeword length able to represent `count` integers,
/// ceil((count - 1) / 3). A length-l set holds 3l + 1 codewords.
int codeword_length(int count);

/// Number of distinct codewords of length `length`.
constexpr int codeword_set_size(int length) noexcept { return 3 * length + 1; }

/// The `index`-th codeword (1-based) of length `length`.
///
/// Codewords come in three groups. Group one fills the word with `1`s from
/// the right starting at all-`0`, group two replaces those `1`s by `i`, and
/// group three replaces the `i`s by `1+i`:
///
///   1 -> 00000, 6 -> 11111, 7 -> 1111i, 11 -> iiiii, 12 -> iiiiu, 16 -> uuuuu
Codeword encode(int index, int length);

/// Inverse of encode. Throws Error{kInvalidCodeword} unless `word` is a
/// staircase: a run of one character followed by a run of its successor.
int decode(std::span<const Symbol> word);

bool is_staircase(std::span<const Symbol> word) noexcept;

std::string to_string(std::span<const Symbol> symbols);
/// Parses a compact symbol string such as `1111i`.
std::vector<Symbol> parse_symbols(std::string_view text);

}  // namespace ccc
