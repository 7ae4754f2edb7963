#include "ccc/network.hpp"

#include <string>

#include "ccc/error.hpp"

namespace ccc {
namespace {

void check_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw_error(ErrorCode::kDimension, std::string(what) + ": length " +
                                           std::to_string(a) + " vs " +
                                           std::to_string(b));
  }
}

}  // namespace

int s_value(std::span<const Symbol> input) noexcept {
  int s = 0;
  for (Symbol sym : input) s += re_bit(sym) + im_bit(sym);
  return s;
}

HiddenUnit assign_hidden(std::span<const Symbol> input, int radius) {
  HiddenUnit unit;
  unit.weights.reserve(input.size());
  for (Symbol sym : input) {
    unit.weights.push_back({re_bit(sym) == 1 ? 1 : -1, im_bit(sym) == 1 ? 1 : -1});
  }
  unit.s = s_value(input);
  unit.bias_weight = radius - unit.s + 1;
  return unit;
}

int pre_activation(std::span<const Symbol> x, const HiddenUnit& unit) {
  check_same_length(x.size(), unit.weights.size(), "pre_activation");
  int total = unit.bias_weight;
  for (std::size_t j = 0; j < x.size(); ++j) {
    total += re_bit(x[j]) * unit.weights[j].re + im_bit(x[j]) * unit.weights[j].im;
  }
  return total;
}

Network Network::train(std::span<const TrainingSample> samples, int radius) {
  if (samples.empty()) {
    throw_error(ErrorCode::kInvalidArgument, "train: empty training set");
  }
  if (radius < 0) {
    throw_error(ErrorCode::kInvalidArgument,
                "train: radius must be nonnegative, got " + std::to_string(radius));
  }
  const std::size_t width = samples.front().input.size();
  const std::size_t outputs = samples.front().targets.size();
  if (width == 0) {
    throw_error(ErrorCode::kInvalidArgument, "train: empty input vector");
  }
  if (outputs == 0) {
    throw_error(ErrorCode::kInvalidArgument, "train: samples carry no targets");
  }

  Network net;
  net.input_width_ = width;
  net.output_count_ = outputs;
  net.radius_ = radius;
  net.hidden_.reserve(samples.size());
  net.output_weights_.reserve(samples.size() * outputs);

  for (const TrainingSample& sample : samples) {
    check_same_length(sample.input.size(), width, "train: input");
    check_same_length(sample.targets.size(), outputs, "train: targets");
    net.hidden_.push_back(assign_hidden(sample.input, radius));
    for (Bit y : sample.targets) {
      if (y > 1) {
        throw_error(ErrorCode::kInvalidArgument, "train: target bits must be 0 or 1");
      }
      net.output_weights_.push_back(y == 1 ? 1 : -1);
    }
  }
  return net;
}

int Network::output_weight(std::size_t unit, std::size_t output) const {
  if (unit >= hidden_.size() || output >= output_count_) {
    throw_error(ErrorCode::kInvalidArgument, "output_weight: index out of range");
  }
  return output_weights_[unit * output_count_ + output];
}

void Network::check_width(std::span<const Symbol> x) const {
  check_same_length(x.size(), input_width_, "network input");
}

std::vector<int> Network::hidden_inputs(std::span<const Symbol> x) const {
  check_width(x);
  std::vector<int> z;
  z.reserve(hidden_.size());
  for (const HiddenUnit& unit : hidden_) z.push_back(pre_activation(x, unit));
  return z;
}

std::vector<Bit> Network::hidden_outputs(std::span<const Symbol> x) const {
  std::vector<Bit> a;
  a.reserve(hidden_.size());
  for (int z : hidden_inputs(x)) a.push_back(step(z));
  return a;
}

std::vector<Bit> Network::forward(std::span<const Symbol> x) const {
  check_width(x);
  std::vector<int> sums(output_count_, 0);
  for (std::size_t m = 0; m < hidden_.size(); ++m) {
    if (step(pre_activation(x, hidden_[m])) == 0) continue;
    const int* row = &output_weights_[m * output_count_];
    for (std::size_t j = 0; j < output_count_; ++j) sums[j] += row[j];
  }
  std::vector<Bit> y;
  y.reserve(output_count_);
  for (int total : sums) y.push_back(step(total));
  return y;
}

std::vector<Bit> bit_expansion(std::span<const Symbol> v) {
  std::vector<Bit> bits;
  bits.reserve(2 * v.size());
  for (Symbol s : v) {
    bits.push_back(static_cast<Bit>(re_bit(s)));
    bits.push_back(static_cast<Bit>(im_bit(s)));
  }
  return bits;
}

int hamming_oracle(std::span<const Symbol> x, std::span<const Symbol> v) {
  check_same_length(x.size(), v.size(), "hamming_oracle");
  const std::vector<Bit> a = bit_expansion(x);
  const std::vector<Bit> b = bit_expansion(v);
  int distance = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != b[j]) ++distance;
  }
  return distance;
}

}  // namespace ccc
