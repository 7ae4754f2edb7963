#include "ccc/ccc.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "ccc/error.hpp"
#include "ccc/mackey_glass.hpp"
#include "ccc/network.hpp"
#include "ccc/quaternary.hpp"
#include "ccc/sample_format.hpp"
#include "ccc/spiral.hpp"

struct ccc_samples {
  std::vector<ccc::TrainingSample> samples;
};
struct ccc_network {
  ccc::Network net;
};
struct ccc_pattern {
  ccc::spiral::PatternGrid grid;
};
struct ccc_plan {
  ccc::spiral::TrainingPlan plan;
};
struct ccc_spiral_report {
  ccc::spiral::ClassificationReport report;
};
struct ccc_series {
  ccc::mackey_glass::Series series;
};
struct ccc_mg_result {
  ccc::mackey_glass::ExperimentResult result;
};

namespace {

thread_local std::string g_last_error;

ccc_status fail(ccc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

ccc_status to_status(ccc::ErrorCode code) {
  switch (code) {
    case ccc::ErrorCode::kInvalidArgument: return CCC_ERROR_INVALID_ARGUMENT;
    case ccc::ErrorCode::kDimension: return CCC_ERROR_DIMENSION;
    case ccc::ErrorCode::kInvalidCodeword: return CCC_ERROR_INVALID_CODEWORD;
    case ccc::ErrorCode::kFormat: return CCC_ERROR_FORMAT;
    case ccc::ErrorCode::kIo: return CCC_ERROR_IO;
  }
  return CCC_ERROR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
ccc_status guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return CCC_OK;
  } catch (const ccc::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CCC_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CCC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CCC_ERROR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) ccc::throw_error(ccc::ErrorCode::kInvalidArgument, message);
}

void require_capacity(std::size_t have, std::size_t need) {
  if (have < need) {
    ccc::throw_error(ccc::ErrorCode::kDimension, "buffer holds " + std::to_string(have) +
                                                     " elements, need " + std::to_string(need));
  }
}

ccc::Symbol to_symbol(ccc_symbol s) {
  if (s > 3) ccc::throw_error(ccc::ErrorCode::kInvalidArgument, "symbol byte outside 0..3");
  return static_cast<ccc::Symbol>(s);
}

std::vector<ccc::Symbol> to_symbols(const ccc_symbol* data, std::size_t n) {
  require(data != nullptr || n == 0, "null symbol buffer");
  std::vector<ccc::Symbol> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(to_symbol(data[j]));
  return out;
}

void copy_prediction(const ccc::mackey_glass::Prediction& p, ccc_mg_prediction* out) {
  out->position = p.position;
  out->actual = p.actual;
  out->predicted = p.predicted;
  out->region_actual = p.region_actual;
  out->region_predicted = p.region_predicted;
}

const double kDefaultSeeds[] = {1.5, 0.65, -0.5, -0.7};

}  // namespace

extern "C" {

const char* ccc_status_name(ccc_status status) {
  switch (status) {
    case CCC_OK: return "ok";
    case CCC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CCC_ERROR_DIMENSION: return "dimension mismatch";
    case CCC_ERROR_INVALID_CODEWORD: return "invalid codeword";
    case CCC_ERROR_FORMAT: return "format error";
    case CCC_ERROR_IO: return "i/o error";
    case CCC_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ccc_last_error_message(void) { return g_last_error.c_str(); }

// ---- quaternary encoding

ccc_status ccc_codeword_length(int32_t count, int32_t* length) {
  return guarded([&] {
    require(length != nullptr, "null output");
    *length = ccc::codeword_length(count);
  });
}

ccc_status ccc_encode(int32_t index, int32_t length, ccc_symbol* out, size_t out_len) {
  return guarded([&] {
    const ccc::Codeword word = ccc::encode(index, length);
    require(out != nullptr, "null output");
    require_capacity(out_len, word.size());
    for (std::size_t j = 0; j < word.size(); ++j) out[j] = static_cast<ccc_symbol>(word[j]);
  });
}

ccc_status ccc_decode(const ccc_symbol* word, size_t length, int32_t* index) {
  return guarded([&] {
    require(index != nullptr, "null output");
    *index = ccc::decode(to_symbols(word, length));
  });
}

char ccc_symbol_char(ccc_symbol symbol) {
  return symbol > 3 ? '?' : ccc::to_char(static_cast<ccc::Symbol>(symbol));
}

ccc_status ccc_parse_symbols(const char* text, ccc_symbol* out, size_t out_len, size_t* length) {
  return guarded([&] {
    require(text != nullptr && length != nullptr, "null argument");
    const std::vector<ccc::Symbol> symbols = ccc::parse_symbols(text);
    require(out != nullptr || symbols.empty(), "null output");
    require_capacity(out_len, symbols.size());
    for (std::size_t j = 0; j < symbols.size(); ++j) out[j] = static_cast<ccc_symbol>(symbols[j]);
    *length = symbols.size();
  });
}

// ---- sample sets

ccc_status ccc_samples_parse(const char* text, ccc_samples** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new ccc_samples{ccc::parse_samples(text)};
  });
}

ccc_status ccc_samples_load(const char* path, ccc_samples** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new ccc_samples{ccc::load_samples(path)};
  });
}

void ccc_samples_free(ccc_samples* samples) { delete samples; }

size_t ccc_samples_count(const ccc_samples* samples) {
  return samples ? samples->samples.size() : 0;
}

size_t ccc_samples_input_width(const ccc_samples* samples) {
  return samples && !samples->samples.empty() ? samples->samples.front().input.size() : 0;
}

size_t ccc_samples_output_count(const ccc_samples* samples) {
  return samples && !samples->samples.empty() ? samples->samples.front().targets.size() : 0;
}

ccc_status ccc_samples_get(const ccc_samples* samples, size_t index, ccc_symbol* input,
                           size_t input_len, uint8_t* targets, size_t targets_len) {
  return guarded([&] {
    require(samples != nullptr, "null samples");
    require(index < samples->samples.size(), "sample index out of range");
    const ccc::TrainingSample& s = samples->samples[index];
    if (input != nullptr) {
      require_capacity(input_len, s.input.size());
      for (std::size_t j = 0; j < s.input.size(); ++j) input[j] = static_cast<ccc_symbol>(s.input[j]);
    }
    if (targets != nullptr) {
      require_capacity(targets_len, s.targets.size());
      for (std::size_t j = 0; j < s.targets.size(); ++j) targets[j] = s.targets[j];
    }
  });
}

// ---- network

ccc_status ccc_network_train(const ccc_samples* samples, int32_t radius, ccc_network** out) {
  return guarded([&] {
    require(samples != nullptr && out != nullptr, "null argument");
    *out = new ccc_network{ccc::Network::train(samples->samples, radius)};
  });
}

ccc_status ccc_network_train_arrays(const ccc_symbol* inputs, const uint8_t* targets, size_t count,
                                    size_t width, size_t outputs, int32_t radius,
                                    ccc_network** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(count == 0 || (inputs != nullptr && targets != nullptr), "null sample buffer");
    std::vector<ccc::TrainingSample> samples(count);
    for (std::size_t m = 0; m < count; ++m) {
      samples[m].input = to_symbols(inputs + m * width, width);
      samples[m].targets.assign(targets + m * outputs, targets + (m + 1) * outputs);
    }
    *out = new ccc_network{ccc::Network::train(samples, radius)};
  });
}

void ccc_network_free(ccc_network* net) { delete net; }

size_t ccc_network_input_width(const ccc_network* net) { return net ? net->net.input_width() : 0; }
size_t ccc_network_output_count(const ccc_network* net) {
  return net ? net->net.output_count() : 0;
}
size_t ccc_network_hidden_count(const ccc_network* net) {
  return net ? net->net.hidden_count() : 0;
}
int32_t ccc_network_radius(const ccc_network* net) { return net ? net->net.radius() : 0; }

ccc_status ccc_network_hidden_unit(const ccc_network* net, size_t unit, int8_t* weight_re,
                                   int8_t* weight_im, size_t width, int32_t* s,
                                   int32_t* bias_weight) {
  return guarded([&] {
    require(net != nullptr, "null network");
    require(unit < net->net.hidden_count(), "hidden unit index out of range");
    const ccc::HiddenUnit& h = net->net.hidden()[unit];
    if (weight_re != nullptr || weight_im != nullptr) require_capacity(width, h.weights.size());
    for (std::size_t j = 0; j < h.weights.size(); ++j) {
      if (weight_re != nullptr) weight_re[j] = static_cast<int8_t>(h.weights[j].re);
      if (weight_im != nullptr) weight_im[j] = static_cast<int8_t>(h.weights[j].im);
    }
    if (s != nullptr) *s = h.s;
    if (bias_weight != nullptr) *bias_weight = h.bias_weight;
  });
}

ccc_status ccc_network_output_weight(const ccc_network* net, size_t unit, size_t output,
                                     int8_t* weight) {
  return guarded([&] {
    require(net != nullptr && weight != nullptr, "null argument");
    *weight = static_cast<int8_t>(net->net.output_weight(unit, output));
  });
}

ccc_status ccc_network_hidden_inputs(const ccc_network* net, const ccc_symbol* x, size_t width,
                                     int32_t* out, size_t out_len) {
  return guarded([&] {
    require(net != nullptr && out != nullptr, "null argument");
    const std::vector<int> z = net->net.hidden_inputs(to_symbols(x, width));
    require_capacity(out_len, z.size());
    for (std::size_t m = 0; m < z.size(); ++m) out[m] = z[m];
  });
}

ccc_status ccc_network_forward(const ccc_network* net, const ccc_symbol* x, size_t width,
                               uint8_t* out, size_t out_len) {
  return guarded([&] {
    require(net != nullptr && out != nullptr, "null argument");
    const std::vector<ccc::Bit> y = net->net.forward(to_symbols(x, width));
    require_capacity(out_len, y.size());
    for (std::size_t j = 0; j < y.size(); ++j) out[j] = y[j];
  });
}

ccc_status ccc_hamming_distance(const ccc_symbol* a, const ccc_symbol* b, size_t width,
                                int32_t* distance) {
  return guarded([&] {
    require(distance != nullptr, "null output");
    *distance = ccc::hamming_oracle(to_symbols(a, width), to_symbols(b, width));
  });
}

// ---- spiral

ccc_status ccc_pattern_parse(const char* text, ccc_pattern** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new ccc_pattern{ccc::spiral::parse_pattern(text)};
  });
}

ccc_status ccc_pattern_load(const char* path, ccc_pattern** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new ccc_pattern{ccc::spiral::load_pattern(path)};
  });
}

void ccc_pattern_free(ccc_pattern* pattern) { delete pattern; }

ccc_status ccc_pattern_cell(const ccc_pattern* pattern, int32_t row, int32_t col, uint8_t* bit) {
  return guarded([&] {
    require(pattern != nullptr && bit != nullptr, "null argument");
    *bit = pattern->grid.at(row, col);
  });
}

ccc_status ccc_plan_sample(const ccc_pattern* pattern, int32_t n_black, int32_t n_white,
                           uint64_t seed, ccc_plan** out) {
  return guarded([&] {
    require(pattern != nullptr && out != nullptr, "null argument");
    *out = new ccc_plan{ccc::spiral::sample_training_points(pattern->grid, n_black, n_white, seed)};
  });
}

void ccc_plan_free(ccc_plan* plan) { delete plan; }

size_t ccc_plan_count(const ccc_plan* plan) { return plan ? plan->plan.points.size() : 0; }

ccc_status ccc_plan_point(const ccc_plan* plan, size_t index, int32_t* row, int32_t* col) {
  return guarded([&] {
    require(plan != nullptr && row != nullptr && col != nullptr, "null argument");
    require(index < plan->plan.points.size(), "plan index out of range");
    *row = plan->plan.points[index].row;
    *col = plan->plan.points[index].col;
  });
}

ccc_status ccc_spiral_run(const ccc_pattern* pattern, const ccc_plan* plan, int32_t radius,
                          ccc_spiral_report** out) {
  return guarded([&] {
    require(pattern != nullptr && plan != nullptr && out != nullptr, "null argument");
    *out = new ccc_spiral_report{ccc::spiral::run_experiment(pattern->grid, plan->plan, radius)};
  });
}

void ccc_spiral_report_free(ccc_spiral_report* report) { delete report; }

int32_t ccc_spiral_report_classified(const ccc_spiral_report* report) {
  return report ? report->report.classified : 0;
}

int32_t ccc_spiral_report_misclassified(const ccc_spiral_report* report) {
  return report ? report->report.misclassified : 0;
}

ccc_status ccc_spiral_report_prediction(const ccc_spiral_report* report, int32_t row, int32_t col,
                                        uint8_t* bit) {
  return guarded([&] {
    require(report != nullptr && bit != nullptr, "null argument");
    require(row >= 1 && row <= ccc::spiral::kGridSize && col >= 1 &&
                col <= ccc::spiral::kGridSize,
            "grid coordinate out of range");
    *bit = report->report.predictions[static_cast<std::size_t>(row - 1)]
                                     [static_cast<std::size_t>(col - 1)];
  });
}

// ---- Mackey-Glass

void ccc_mg_default_params(ccc_mg_params* params) {
  if (params == nullptr) return;
  const ccc::mackey_glass::SeriesParams defaults;
  params->alpha = defaults.alpha;
  params->beta = defaults.beta;
  params->gamma = defaults.gamma;
  params->tau = defaults.tau;
  params->length = defaults.length;
  params->seeds = kDefaultSeeds;
  params->seed_count = sizeof(kDefaultSeeds) / sizeof(kDefaultSeeds[0]);
}

ccc_status ccc_mg_generate(const ccc_mg_params* params, ccc_series** out) {
  return guarded([&] {
    require(params != nullptr && out != nullptr, "null argument");
    require(params->seeds != nullptr || params->seed_count == 0, "null seed buffer");
    ccc::mackey_glass::SeriesParams p;
    p.alpha = params->alpha;
    p.beta = params->beta;
    p.gamma = params->gamma;
    p.tau = params->tau;
    p.length = params->length;
    p.seeds.assign(params->seeds, params->seeds + params->seed_count);
    *out = new ccc_series{ccc::mackey_glass::generate(p)};
  });
}

void ccc_series_free(ccc_series* series) { delete series; }

int32_t ccc_series_length(const ccc_series* series) { return series ? series->series.size() : 0; }

ccc_status ccc_series_value(const ccc_series* series, int32_t position, double* value) {
  return guarded([&] {
    require(series != nullptr && value != nullptr, "null argument");
    *value = series->series.at(position);
  });
}

int32_t ccc_mg_quantize(double x) { return ccc::mackey_glass::Quantizer{}.quantize(x); }

ccc_status ccc_mg_dequantize(int32_t index, double* x) {
  return guarded([&] {
    require(x != nullptr, "null output");
    *x = ccc::mackey_glass::Quantizer{}.dequantize(index);
  });
}

ccc_status ccc_mg_run(const ccc_series* series, int32_t radius, ccc_mg_result** out) {
  return guarded([&] {
    require(series != nullptr && out != nullptr, "null argument");
    *out = new ccc_mg_result{ccc::mackey_glass::run_experiment(series->series, radius)};
  });
}

void ccc_mg_result_free(ccc_mg_result* result) { delete result; }

size_t ccc_mg_result_prediction_count(const ccc_mg_result* result) {
  return result ? result->result.predictions.size() : 0;
}

ccc_status ccc_mg_result_prediction(const ccc_mg_result* result, size_t index,
                                    ccc_mg_prediction* out) {
  return guarded([&] {
    require(result != nullptr && out != nullptr, "null argument");
    require(index < result->result.predictions.size(), "prediction index out of range");
    copy_prediction(result->result.predictions[index], out);
  });
}

size_t ccc_mg_result_trace_count(const ccc_mg_result* result) {
  return result ? result->result.training_trace.size() : 0;
}

ccc_status ccc_mg_result_trace(const ccc_mg_result* result, size_t index, ccc_mg_prediction* out) {
  return guarded([&] {
    require(result != nullptr && out != nullptr, "null argument");
    require(index < result->result.training_trace.size(), "trace index out of range");
    copy_prediction(result->result.training_trace[index], out);
  });
}

double ccc_mg_result_nmse(const ccc_mg_result* result) { return result ? result->result.nmse : 0.0; }

double ccc_mg_result_nmse_centered(const ccc_mg_result* result) {
  return result ? result->result.nmse_centered : 0.0;
}

}  // extern "C"
