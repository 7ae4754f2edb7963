#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ccc/quaternary.hpp"

namespace ccc {

using Bit = std::uint8_t;

/// Input symbols presented to the network. The constant bias input is not
/// stored; every hidden unit carries its own bias weight instead.
using InputVector = std::vector<Symbol>;

struct TrainingSample {
  InputVector input;
  std::vector<Bit> targets;
};

/// Weight on one symbol input. Both parts are always +1 or -1.
struct ComplexWeight {
  int re = -1;
  int im = -1;

  friend bool operator==(const ComplexWeight&, const ComplexWeight&) = default;
};

/// One stored training vector.
struct HiddenUnit {
  std::vector<ComplexWeight> weights;
  int s = 0;            // sum of real and imaginary bits of the stored vector
  int bias_weight = 0;  // radius - s + 1
};

/// Number of 1s plus number of i's plus twice the number of (1+i)s.
int s_value(std::span<const Symbol> input) noexcept;

/// Prescriptive weight assignment for a single stored vector: each weight
/// part is +1 where the input bit is 1 and -1 where it is 0.
HiddenUnit assign_hidden(std::span<const Symbol> input, int radius);

/// Real part times real weight plus imaginary part times imaginary weight,
/// summed over the vector, plus the bias weight. For a unit stored from v
/// this equals radius + 1 - hamming_oracle(x, v).
int pre_activation(std::span<const Symbol> x, const HiddenUnit& unit);

/// Binary step: fires on strictly positive input.
constexpr Bit step(int z) noexcept { return z > 0 ? 1 : 0; }

/// A trained three-layer corner-classification network.
///
/// There is one hidden unit per training sample, in training order, and the
/// output layer is fully connected with weights +1 (target bit 1) or -1
/// (target bit 0). Training never iterates: every weight is read off the
/// samples. A Network is immutable once built and safe to share across
/// threads.
class Network {
 public:
  /// Throws Error{kInvalidArgument} for an empty sample set, a negative
  /// radius, or samples without targets, and Error{kDimension} when the
  /// samples disagree on input or target length. Duplicate inputs are kept;
  /// their output contributions add up at inference.
  static Network train(std::span<const TrainingSample> samples, int radius);

  std::size_t input_width() const noexcept { return input_width_; }
  std::size_t output_count() const noexcept { return output_count_; }
  std::size_t hidden_count() const noexcept { return hidden_.size(); }
  int radius() const noexcept { return radius_; }

  const std::vector<HiddenUnit>& hidden() const noexcept { return hidden_; }
  int output_weight(std::size_t unit, std::size_t output) const;

  /// Input to every hidden unit for probe `x`.
  std::vector<int> hidden_inputs(std::span<const Symbol> x) const;
  /// step() of hidden_inputs.
  std::vector<Bit> hidden_outputs(std::span<const Symbol> x) const;
  /// Output bits for probe `x`. An output whose weighted sum is exactly zero
  /// (nothing fired, or conflicting votes cancel) reads 0.
  std::vector<Bit> forward(std::span<const Symbol> x) const;

 private:
  void check_width(std::span<const Symbol> x) const;

  std::size_t input_width_ = 0;
  std::size_t output_count_ = 0;
  int radius_ = 0;
  std::vector<HiddenUnit> hidden_;
  std::vector<int> output_weights_;  // row-major, hidden x outputs
};

/// (re, im) bit pairs of every symbol, in order.
std::vector<Bit> bit_expansion(std::span<const Symbol> v);

/// Hamming distance between the bit expansions of `x` and `v`. This is the
/// brute-force reference the firing rule is checked against.
int hamming_oracle(std::span<const Symbol> x, std::span<const Symbol> v);

}  // namespace ccc
