#include "ccc/spiral.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ccc/error.hpp"
#include "ccc/quaternary.hpp"

namespace ccc::spiral {
namespace {

void check_coordinate(int value, const char* name) {
  if (value < 1 || value > kGridSize) {
    throw_error(ErrorCode::kInvalidArgument, std::string(name) + " " + std::to_string(value) +
                                                 " outside 1.." + std::to_string(kGridSize));
  }
}

// Unbiased draw from [0, bound) using only raw engine output.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

void draw_into(std::vector<GridPoint> pool, int n, std::mt19937_64& rng,
               std::vector<GridPoint>& out) {
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const std::size_t j = i + draw_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
}

}  // namespace

Bit PatternGrid::at(int row, int col) const {
  check_coordinate(row, "row");
  check_coordinate(col, "column");
  return cells_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

int PatternGrid::black_count() const noexcept {
  int n = 0;
  for (const auto& row : cells_) {
    for (Bit b : row) n += b;
  }
  return n;
}

PatternGrid parse_pattern(std::string_view text) {
  BitGrid cells{};
  int row = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (row == kGridSize) {
      if (line.empty() && pos >= text.size()) break;
      throw_error(ErrorCode::kFormat, "pattern: more than 16 lines");
    }
    if (line.size() != kGridSize) {
      throw_error(ErrorCode::kFormat, "pattern: line " + std::to_string(row + 1) + " has " +
                                          std::to_string(line.size()) + " characters, expected 16");
    }
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] != '#' && line[c] != '.') {
        throw_error(ErrorCode::kFormat, "pattern: line " + std::to_string(row + 1) +
                                            ": unexpected character '" + line[c] + "'");
      }
      cells[static_cast<std::size_t>(row)][c] = line[c] == '#' ? 1 : 0;
    }
    ++row;
  }
  if (row != kGridSize) {
    throw_error(ErrorCode::kFormat,
                "pattern: " + std::to_string(row) + " lines, expected 16");
  }
  return PatternGrid(cells);
}

PatternGrid load_pattern(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern(buffer.str());
}

InputVector encode_point(int row, int col) {
  check_coordinate(row, "row");
  check_coordinate(col, "column");
  InputVector v = encode(row, kCoordinateLength);
  const Codeword c = encode(col, kCoordinateLength);
  v.insert(v.end(), c.begin(), c.end());
  return v;
}

TrainingPlan sample_training_points(const PatternGrid& grid, int n_black, int n_white,
                                    std::uint64_t seed) {
  std::vector<GridPoint> black;
  std::vector<GridPoint> white;
  for (int r = 1; r <= kGridSize; ++r) {
    for (int c = 1; c <= kGridSize; ++c) {
      (grid.at(r, c) == 1 ? black : white).push_back({r, c});
    }
  }
  if (n_black < 0 || n_white < 0) {
    throw_error(ErrorCode::kInvalidArgument, "sample counts must be nonnegative");
  }
  if (static_cast<std::size_t>(n_black) > black.size()) {
    throw_error(ErrorCode::kInvalidArgument, "requested " + std::to_string(n_black) +
                                                 " black points, pattern has " +
                                                 std::to_string(black.size()));
  }
  if (static_cast<std::size_t>(n_white) > white.size()) {
    throw_error(ErrorCode::kInvalidArgument, "requested " + std::to_string(n_white) +
                                                 " white points, pattern has " +
                                                 std::to_string(white.size()));
  }

  TrainingPlan plan;
  plan.seed = seed;
  plan.points.reserve(static_cast<std::size_t>(n_black + n_white));
  std::mt19937_64 rng(seed);
  draw_into(std::move(black), n_black, rng, plan.points);
  draw_into(std::move(white), n_white, rng, plan.points);
  return plan;
}

ClassificationReport run_experiment(const PatternGrid& grid, const TrainingPlan& plan,
                                    int radius) {
  if (plan.points.empty()) {
    throw_error(ErrorCode::kInvalidArgument, "run_experiment: empty training plan");
  }
  std::vector<TrainingSample> samples;
  samples.reserve(plan.points.size());
  for (const GridPoint& p : plan.points) {
    samples.push_back({encode_point(p.row, p.col), {grid.at(p.row, p.col)}});
  }
  const Network net = Network::train(samples, radius);

  ClassificationReport report;
  report.radius = radius;
  for (int r = 1; r <= kGridSize; ++r) {
    for (int c = 1; c <= kGridSize; ++c) {
      const Bit predicted = net.forward(encode_point(r, c)).front();
      report.predictions[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
          predicted;
      if (predicted == grid.at(r, c)) {
        ++report.classified;
      } else {
        ++report.misclassified;
      }
    }
  }
  return report;
}

}  // namespace ccc::spiral
