#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "ccc/error.hpp"
#include "ccc/quaternary.hpp"

using namespace ccc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected ccc::Error");
  return ErrorCode::kIo;
}

// Independent staircase check: symbol values never decrease and never jump
// by more than one step, and at most two distinct values appear.
bool monotone_staircase(const Codeword& w) {
  std::set<int> values;
  for (std::size_t j = 0; j < w.size(); ++j) {
    values.insert(static_cast<int>(w[j]));
    if (j > 0) {
      const int step = static_cast<int>(w[j]) - static_cast<int>(w[j - 1]);
      if (step < 0 || step > 1) return false;
    }
  }
  return values.size() <= 2;
}

}  // namespace

TEST_CASE("symbol bits") {
  CHECK(re_bit(Symbol::kZero) == 0);
  CHECK(im_bit(Symbol::kZero) == 0);
  CHECK(re_bit(Symbol::kOne) == 1);
  CHECK(im_bit(Symbol::kOne) == 0);
  CHECK(re_bit(Symbol::kI) == 0);
  CHECK(im_bit(Symbol::kI) == 1);
  CHECK(re_bit(Symbol::kOnePlusI) == 1);
  CHECK(im_bit(Symbol::kOnePlusI) == 1);
  for (int re = 0; re <= 1; ++re) {
    for (int im = 0; im <= 1; ++im) {
      const Symbol s = make_symbol(re, im);
      CHECK(re_bit(s) == re);
      CHECK(im_bit(s) == im);
      CHECK(symbol_from_char(to_char(s)) == s);
    }
  }
  CHECK(code_of([] { symbol_from_char('x'); }) == ErrorCode::kFormat);
}

TEST_CASE("codeword_length") {
  CHECK(codeword_length(16) == 5);
  CHECK(codeword_length(4) == 1);
  CHECK(codeword_length(17) == 6);
  CHECK(codeword_length(2) == 1);
  CHECK(codeword_length(5) == 2);
  CHECK(code_of([] { codeword_length(1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { codeword_length(-3); }) == ErrorCode::kInvalidArgument);
  for (int c = 2; c < 200; ++c) {
    const int l = codeword_length(c);
    CHECK(codeword_set_size(l) >= c);
    CHECK(codeword_set_size(l - 1) < c);
  }
}

TEST_CASE("encode matches the published table of 16 codewords") {
  const char* table[] = {"00000", "00001", "00011", "00111", "01111", "11111",
                         "1111i", "111ii", "11iii", "1iiii", "iiiii", "iiiiu",
                         "iiiuu", "iiuuu", "iuuuu", "uuuuu"};
  for (int k = 1; k <= 16; ++k) {
    CAPTURE(k);
    CHECK(to_string(encode(k, 5)) == table[k - 1]);
  }
}

TEST_CASE("encode errors") {
  CHECK(code_of([] { encode(0, 5); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { encode(17, 5); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { encode(1, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("decode") {
  CHECK(decode(parse_symbols("00001")) == 2);
  CHECK(decode(parse_symbols("00000")) == 1);
  CHECK(decode(parse_symbols("iuuuu")) == 15);
  CHECK(decode(parse_symbols("u")) == 4);
  CHECK(code_of([] { decode(parse_symbols("010")); }) == ErrorCode::kInvalidCodeword);
  CHECK(code_of([] { decode(parse_symbols("0i")); }) == ErrorCode::kInvalidCodeword);
  CHECK(code_of([] { decode(parse_symbols("10")); }) == ErrorCode::kInvalidCodeword);
  CHECK(code_of([] { decode(Codeword{}); }) == ErrorCode::kInvalidCodeword);
}

TEST_CASE("round trip, set size and staircase shape for l = 1..8") {
  for (int l = 1; l <= 8; ++l) {
    std::set<std::string> seen;
    for (int k = 1; k <= codeword_set_size(l); ++k) {
      const Codeword w = encode(k, l);
      CHECK(static_cast<int>(w.size()) == l);
      CHECK(monotone_staircase(w));
      CHECK(is_staircase(w));
      CHECK(decode(w) == k);
      seen.insert(to_string(w));
    }
    CHECK(static_cast<int>(seen.size()) == 3 * l + 1);
  }
}

TEST_CASE("staircase predicate agrees with the encoder on every short word") {
  // All 4^4 words of length 4: exactly the 13 codewords are staircases.
  int staircases = 0;
  for (int code = 0; code < 256; ++code) {
    Codeword w;
    for (int j = 0; j < 4; ++j) w.push_back(static_cast<Symbol>((code >> (2 * (3 - j))) & 3));
    if (is_staircase(w)) {
      ++staircases;
      CHECK(encode(decode(w), 4) == w);
    }
  }
  CHECK(staircases == 13);
}
