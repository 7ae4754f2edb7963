#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "ccc/network.hpp"

namespace ccc {

/// Parses the line-oriented sample format:
///
///   # comment
///   i u -> 1
///   0 u u 0 i -> 1 1
///
/// Symbols and bits are whitespace separated; blank lines and lines whose
/// first non-blank character is '#' are skipped. The `-> bits` part may be
/// omitted on every line (evaluation-only files) but not on some lines only.
/// All lines must agree on input and target length.
///
/// Errors are Error{kFormat} and name the offending 1-based line.
std::vector<TrainingSample> parse_samples(std::string_view text);

std::vector<TrainingSample> load_samples(const std::filesystem::path& path);

}  // namespace ccc
