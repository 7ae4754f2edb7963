#pragma once

#include <array>
#include <span>
#include <vector>

#include "ccc/network.hpp"

namespace ccc::mackey_glass {

/// Discrete Mackey-Glass recurrence
///
///   x(k+1) = x(k) + alpha * x(k-tau) / (1 + x(k-tau)^gamma) - beta * x(k)
///
/// started from tau + 1 given values. Defaults are the benchmark settings.
struct SeriesParams {
  double alpha = 3.0;
  double beta = 1.0005;
  double gamma = 6.0;
  int tau = 3;
  std::vector<double> seeds{1.5, 0.65, -0.5, -0.7};
  int length = 200;
};

/// A real sequence indexed from 1, as x(1)..x(N).
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<double> values) : values_(std::move(values)) {}

  double at(int position) const;
  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Throws Error{kInvalidArgument} when tau < 1, length < tau + 2, or the
/// seed count differs from tau + 1.
Series generate(const SeriesParams& params);

/// 16 equal regions over [lo, hi], numbered 1..16. Bins are half-open
/// [edge, edge + width) except the last, which also holds hi. Values outside
/// the range clamp to the end bins.
struct Quantizer {
  static constexpr int kBins = 16;
  double lo = -2.0;
  double hi = 2.0;

  double width() const noexcept { return (hi - lo) / kBins; }
  int quantize(double x) const noexcept;
  /// Bin center. Throws Error{kInvalidArgument} outside 1..16.
  double dequantize(int index) const;
};

inline constexpr int kWindowSize = 4;
inline constexpr int kTargetBits = 4;
inline constexpr int kTrainingWindows = 175;

/// Four consecutive region indices and the region of the next point.
struct Window {
  std::array<int, kWindowSize> inputs{};
  int target = 0;
  int target_position = 0;  // series position of the target point
};

/// Windows t = 1..count: inputs from positions t..t+3, target t+4.
std::vector<Window> build_training_windows(const Series& s, int count, const Quantizer& q);

/// Concatenated 5-symbol codewords of the four indices (20 symbols).
InputVector encode_window(std::span<const int> indices);

/// MSB-first binary of index - 1.
std::array<Bit, kTargetBits> encode_target(int index);
/// Every 4-bit pattern is valid: 1 + its binary value.
int decode_output(std::span<const Bit> bits);

struct Prediction {
  int position = 0;
  double actual = 0.0;
  double predicted = 0.0;
  int region_actual = 0;
  int region_predicted = 0;
};

/// One-step-ahead prediction of positions first..last. Each input window is
/// always taken from the true series, never from earlier predictions.
std::vector<Prediction> predict(const Network& net, const Series& s, int first, int last,
                                const Quantizer& q);

/// Sum of squared errors over the centered sum of squares of `actual`.
/// Throws Error{kInvalidArgument} on length mismatch, empty input, or
/// constant `actual`.
double nmse(std::span<const double> predicted, std::span<const double> actual);

/// Mean squared error divided by the squared quantizer range (hi - lo)^2.
/// This is the normalization the reference error table is reported in.
double range_nmse(std::span<const double> predicted, std::span<const double> actual,
                  const Quantizer& q);

/// Training on the first 175 windows and predicting 180..series end.
struct ExperimentResult {
  int radius = 0;
  std::vector<Prediction> training_trace;  // network recall on positions 5..179
  std::vector<Prediction> predictions;
  double nmse = 0.0;        // range-normalized
  double nmse_centered = 0.0;
};

/// Throws Error{kInvalidArgument} when the series is too short or the actual
/// values over the prediction range are constant.
ExperimentResult run_experiment(const Series& s, int radius, const Quantizer& q = {});

}  // namespace ccc::mackey_glass
