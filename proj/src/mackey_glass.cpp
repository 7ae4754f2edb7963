#include "ccc/mackey_glass.hpp"

#include <cmath>
#include <string>

#include "ccc/error.hpp"
#include "ccc/quaternary.hpp"

namespace ccc::mackey_glass {
namespace {

constexpr int kCodewordLength = 5;

void check_region(int index) {
  if (index < 1 || index > Quantizer::kBins) {
    throw_error(ErrorCode::kInvalidArgument,
                "region index " + std::to_string(index) + " outside 1..16");
  }
}

std::vector<Prediction> recall(const Network& net, const Series& s, int first, int last,
                               const Quantizer& q) {
  std::vector<Prediction> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (int p = first; p <= last; ++p) {
    std::array<int, kWindowSize> inputs{};
    for (int j = 0; j < kWindowSize; ++j) inputs[static_cast<std::size_t>(j)] = q.quantize(s.at(p - kWindowSize + j));
    const std::vector<Bit> bits = net.forward(encode_window(inputs));
    Prediction pred;
    pred.position = p;
    pred.actual = s.at(p);
    pred.region_actual = q.quantize(pred.actual);
    pred.region_predicted = decode_output(bits);
    pred.predicted = q.dequantize(pred.region_predicted);
    out.push_back(pred);
  }
  return out;
}

}  // namespace

double Series::at(int position) const {
  if (position < 1 || position > size()) {
    throw_error(ErrorCode::kInvalidArgument, "series position " + std::to_string(position) +
                                                 " outside 1.." + std::to_string(size()));
  }
  return values_[static_cast<std::size_t>(position - 1)];
}

Series generate(const SeriesParams& params) {
  if (params.tau < 1) {
    throw_error(ErrorCode::kInvalidArgument, "tau must be at least 1");
  }
  if (params.length < params.tau + 2) {
    throw_error(ErrorCode::kInvalidArgument,
                "length must be at least tau + 2 = " + std::to_string(params.tau + 2));
  }
  if (params.seeds.size() != static_cast<std::size_t>(params.tau + 1)) {
    throw_error(ErrorCode::kInvalidArgument, "expected " + std::to_string(params.tau + 1) +
                                                 " seed values, got " +
                                                 std::to_string(params.seeds.size()));
  }
  std::vector<double> x(params.seeds);
  x.reserve(static_cast<std::size_t>(params.length));
  // x is 0-based here: x[k] holds x(k + 1).
  for (std::size_t k = x.size() - 1; x.size() < static_cast<std::size_t>(params.length); ++k) {
    const double delayed = x[k - static_cast<std::size_t>(params.tau)];
    const double next =
        x[k] + params.alpha * delayed / (1.0 + std::pow(delayed, params.gamma)) - params.beta * x[k];
    x.push_back(next);
  }
  return Series(std::move(x));
}

int Quantizer::quantize(double x) const noexcept {
  if (!(x >= lo)) return 1;  // also NaN
  if (x >= hi) return kBins;
  int index = 1 + static_cast<int>(std::floor((x - lo) / width()));
  // x - lo can round up onto an edge; settle against the edges themselves.
  if (index > 1 && x < lo + (index - 1) * width()) --index;
  if (index < kBins && x >= lo + index * width()) ++index;
  return index > kBins ? kBins : index;
}

double Quantizer::dequantize(int index) const {
  check_region(index);
  return lo + (index - 0.5) * width();
}

std::vector<Window> build_training_windows(const Series& s, int count, const Quantizer& q) {
  if (count < 1) {
    throw_error(ErrorCode::kInvalidArgument, "window count must be positive");
  }
  if (s.size() < count + kWindowSize) {
    throw_error(ErrorCode::kInvalidArgument,
                "series of " + std::to_string(s.size()) + " points is too short for " +
                    std::to_string(count) + " windows");
  }
  std::vector<Window> windows(static_cast<std::size_t>(count));
  for (int t = 1; t <= count; ++t) {
    Window& w = windows[static_cast<std::size_t>(t - 1)];
    for (int j = 0; j < kWindowSize; ++j) w.inputs[static_cast<std::size_t>(j)] = q.quantize(s.at(t + j));
    w.target_position = t + kWindowSize;
    w.target = q.quantize(s.at(w.target_position));
  }
  return windows;
}

InputVector encode_window(std::span<const int> indices) {
  if (indices.size() != kWindowSize) {
    throw_error(ErrorCode::kDimension, "window needs exactly 4 region indices");
  }
  InputVector v;
  v.reserve(kWindowSize * kCodewordLength);
  for (int index : indices) {
    check_region(index);
    const Codeword c = encode(index, kCodewordLength);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

std::array<Bit, kTargetBits> encode_target(int index) {
  check_region(index);
  const int value = index - 1;
  std::array<Bit, kTargetBits> bits{};
  for (int j = 0; j < kTargetBits; ++j) {
    bits[static_cast<std::size_t>(j)] = static_cast<Bit>((value >> (kTargetBits - 1 - j)) & 1);
  }
  return bits;
}

int decode_output(std::span<const Bit> bits) {
  if (bits.size() != kTargetBits) {
    throw_error(ErrorCode::kDimension, "expected 4 output bits");
  }
  int value = 0;
  for (Bit b : bits) value = (value << 1) | (b & 1);
  return value + 1;
}

std::vector<Prediction> predict(const Network& net, const Series& s, int first, int last,
                                const Quantizer& q) {
  if (first <= kWindowSize || last < first || last > s.size()) {
    throw_error(ErrorCode::kInvalidArgument,
                "prediction range " + std::to_string(first) + ".." + std::to_string(last) +
                    " does not fit a series of " + std::to_string(s.size()) + " points");
  }
  return recall(net, s, first, last, q);
}

double nmse(std::span<const double> predicted, std::span<const double> actual) {
  if (predicted.size() != actual.size() || actual.empty()) {
    throw_error(ErrorCode::kInvalidArgument, "nmse: need equal, nonempty sequences");
  }
  double mean = 0.0;
  for (double a : actual) mean += a;
  mean /= static_cast<double>(actual.size());
  double error = 0.0;
  double spread = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    error += (predicted[i] - actual[i]) * (predicted[i] - actual[i]);
    spread += (actual[i] - mean) * (actual[i] - mean);
  }
  if (spread == 0.0) {
    throw_error(ErrorCode::kInvalidArgument, "nmse: actual values are constant");
  }
  return error / spread;
}

double range_nmse(std::span<const double> predicted, std::span<const double> actual,
                  const Quantizer& q) {
  if (predicted.size() != actual.size() || actual.empty()) {
    throw_error(ErrorCode::kInvalidArgument, "range_nmse: need equal, nonempty sequences");
  }
  double error = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    error += (predicted[i] - actual[i]) * (predicted[i] - actual[i]);
  }
  const double range = q.hi - q.lo;
  return error / static_cast<double>(actual.size()) / (range * range);
}

ExperimentResult run_experiment(const Series& s, int radius, const Quantizer& q) {
  const std::vector<Window> windows = build_training_windows(s, kTrainingWindows, q);
  std::vector<TrainingSample> samples;
  samples.reserve(windows.size());
  for (const Window& w : windows) {
    const auto bits = encode_target(w.target);
    samples.push_back({encode_window(w.inputs), {bits.begin(), bits.end()}});
  }
  const Network net = Network::train(samples, radius);

  ExperimentResult result;
  result.radius = radius;
  const int first = kTrainingWindows + kWindowSize + 1;
  result.training_trace = recall(net, s, kWindowSize + 1, first - 1, q);
  result.predictions = predict(net, s, first, s.size(), q);

  std::vector<double> predicted;
  std::vector<double> actual;
  for (const Prediction& p : result.predictions) {
    predicted.push_back(p.predicted);
    actual.push_back(p.actual);
  }
  result.nmse_centered = nmse(predicted, actual);
  result.nmse = range_nmse(predicted, actual, q);
  return result;
}

}  // namespace ccc::mackey_glass
