#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "ccc/error.hpp"
#include "ccc/spiral.hpp"

using namespace ccc;
using namespace ccc::spiral;

namespace {

std::string uniform_text(char c) {
  std::string text;
  for (int r = 0; r < kGridSize; ++r) text += std::string(kGridSize, c) + "\n";
  return text;
}

PatternGrid fixture() { return load_pattern(std::string(CCC_DATA_DIR) + "/spiral.txt"); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected ccc::Error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("parse_pattern") {
  CHECK(parse_pattern(uniform_text('.')).black_count() == 0);
  CHECK(parse_pattern(uniform_text('#')).black_count() == 256);

  const PatternGrid grid = fixture();
  CHECK(grid.black_count() > 0);
  CHECK(grid.black_count() < 256);

  std::string bad = uniform_text('.');
  bad[3] = 'x';
  CHECK(code_of([&] { parse_pattern(bad); }) == ErrorCode::kFormat);
  CHECK(code_of([] { parse_pattern(std::string(16, '.') + "\n"); }) == ErrorCode::kFormat);
  CHECK(code_of([] { parse_pattern(uniform_text('.') + "................\n"); }) ==
        ErrorCode::kFormat);
  std::string short_line = uniform_text('#');
  short_line.erase(0, 1);
  CHECK(code_of([&] { parse_pattern(short_line); }) == ErrorCode::kFormat);
}

TEST_CASE("encode_point") {
  CHECK(to_string(encode_point(1, 1)) == "0000000000");
  CHECK(to_string(encode_point(6, 11)) == "11111iiiii");
  CHECK(to_string(encode_point(16, 1)) == "uuuuu00000");
  CHECK(code_of([] { encode_point(0, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { encode_point(1, 17); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("sample_training_points") {
  const PatternGrid grid = fixture();
  CHECK(sample_training_points(grid, 0, 0, 1).points.empty());

  const PatternGrid full = parse_pattern(uniform_text('#'));
  const TrainingPlan all = sample_training_points(full, 256, 0, 5);
  std::set<std::pair<int, int>> every;
  for (const auto& p : all.points) every.insert({p.row, p.col});
  CHECK(every.size() == 256);

  const TrainingPlan plan = sample_training_points(grid, 45, 30, 42);
  REQUIRE(plan.points.size() == 75);
  std::set<std::pair<int, int>> distinct;
  int black = 0;
  for (const GridPoint& p : plan.points) {
    distinct.insert({p.row, p.col});
    black += grid.at(p.row, p.col);
  }
  CHECK(distinct.size() == 75);
  CHECK(black == 45);

  const TrainingPlan again = sample_training_points(grid, 45, 30, 42);
  CHECK(again.points == plan.points);
  CHECK(sample_training_points(grid, 45, 30, 43).points != plan.points);

  CHECK(code_of([&] { sample_training_points(grid, grid.black_count() + 1, 0, 1); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { sample_training_points(grid, 0, 257 - grid.black_count(), 1); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { sample_training_points(grid, -1, 0, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("r = 0 recalls trained points and rejects everything else") {
  const PatternGrid grid = fixture();
  const TrainingPlan plan = sample_training_points(grid, 45, 30, 42);
  const ClassificationReport report = run_experiment(grid, plan, 0);
  std::set<std::pair<int, int>> trained;
  for (const GridPoint& p : plan.points) trained.insert({p.row, p.col});
  for (int r = 1; r <= kGridSize; ++r) {
    for (int c = 1; c <= kGridSize; ++c) {
      const Bit predicted = report.predictions[r - 1][c - 1];
      if (trained.count({r, c})) {
        CHECK(predicted == grid.at(r, c));
      } else {
        CHECK(predicted == 0);
      }
    }
  }
  CHECK(report.classified + report.misclassified == 256);
}

TEST_CASE("reports partition the grid and are deterministic") {
  const PatternGrid grid = fixture();
  const TrainingPlan plan = sample_training_points(grid, 45, 30, 9);
  for (int r = 0; r <= 6; ++r) {
    const ClassificationReport a = run_experiment(grid, plan, r);
    const ClassificationReport b = run_experiment(grid, plan, r);
    CHECK(a.classified + a.misclassified == 256);
    CHECK(a.predictions == b.predictions);
    CHECK(a.radius == r);
  }
  CHECK(code_of([&] { run_experiment(grid, TrainingPlan{}, 1); }) == ErrorCode::kInvalidArgument);
}
