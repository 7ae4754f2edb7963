#include "ccc/sample_format.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "ccc/error.hpp"

namespace ccc {
namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw_error(ErrorCode::kFormat, "line " + std::to_string(line) + ": " + what);
}

Symbol parse_symbol_token(std::string_view token, std::size_t line) {
  if (token == "1+i") return Symbol::kOnePlusI;
  if (token.size() != 1) fail(line, "bad symbol '" + std::string(token) + "'");
  try {
    return symbol_from_char(token.front());
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace

std::vector<TrainingSample> parse_samples(std::string_view text) {
  std::vector<TrainingSample> samples;
  bool first = true;
  bool with_targets = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const std::vector<std::string_view> tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    TrainingSample sample;
    bool seen_arrow = false;
    for (std::string_view token : tokens) {
      if (token == "->") {
        if (seen_arrow) fail(line_no, "more than one '->'");
        seen_arrow = true;
      } else if (!seen_arrow) {
        sample.input.push_back(parse_symbol_token(token, line_no));
      } else if (token == "0" || token == "1") {
        sample.targets.push_back(token == "1" ? 1 : 0);
      } else {
        fail(line_no, "bad output bit '" + std::string(token) + "'");
      }
    }
    if (sample.input.empty()) fail(line_no, "no input symbols");
    if (seen_arrow && sample.targets.empty()) fail(line_no, "no output bits after '->'");

    if (first) {
      with_targets = seen_arrow;
      first = false;
    } else {
      const TrainingSample& ref = samples.front();
      if (seen_arrow != with_targets) fail(line_no, "targets given on some lines only");
      if (sample.input.size() != ref.input.size()) {
        fail(line_no, "expected " + std::to_string(ref.input.size()) + " input symbols, got " +
                          std::to_string(sample.input.size()));
      }
      if (sample.targets.size() != ref.targets.size()) {
        fail(line_no, "expected " + std::to_string(ref.targets.size()) + " output bits, got " +
                          std::to_string(sample.targets.size()));
      }
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<TrainingSample> load_samples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_samples(buffer.str());
}

}  // namespace ccc
