#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "ccc/network.hpp"

namespace ccc::spiral {

inline constexpr int kGridSize = 16;
inline constexpr int kCellCount = kGridSize * kGridSize;
/// Each coordinate is a 5-symbol codeword, giving 10 symbol inputs.
inline constexpr int kCoordinateLength = 5;

using BitGrid = std::array<std::array<Bit, kGridSize>, kGridSize>;

/// A two-region 16x16 pattern; 1 marks the spiral (black) region.
/// Rows and columns are 1-based.
class PatternGrid {
 public:
  PatternGrid() = default;
  explicit PatternGrid(const BitGrid& cells) : cells_(cells) {}

  Bit at(int row, int col) const;
  const BitGrid& cells() const noexcept { return cells_; }
  int black_count() const noexcept;

 private:
  BitGrid cells_{};
};

/// 16 lines of 16 characters from {'#', '.'}. A trailing newline and '\r'
/// line endings are accepted. Throws Error{kFormat}.
PatternGrid parse_pattern(std::string_view text);
PatternGrid load_pattern(const std::filesystem::path& path);

struct GridPoint {
  int row = 0;
  int col = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct TrainingPlan {
  std::vector<GridPoint> points;  // black draws first, then white draws
  std::uint64_t seed = 0;
};

/// Row codeword followed by column codeword.
InputVector encode_point(int row, int col);

/// Draws `n_black` distinct black cells and `n_white` distinct white cells.
/// The draw is a partial Fisher-Yates shuffle over each region's cells in
/// row-major order driven by mt19937_64(seed), so a seed fixes the plan on
/// every platform.
TrainingPlan sample_training_points(const PatternGrid& grid, int n_black, int n_white,
                                    std::uint64_t seed);

struct ClassificationReport {
  int radius = 0;
  BitGrid predictions{};
  int classified = 0;
  int misclassified = 0;
};

/// Trains on the plan (target = the grid's bit at each point) and classifies
/// all 256 cells.
ClassificationReport run_experiment(const PatternGrid& grid, const TrainingPlan& plan, int radius);

}  // namespace ccc::spiral
