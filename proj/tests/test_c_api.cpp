#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>
#include <vector>

#include "ccc/ccc.h"

namespace {

const std::string kData = CCC_DATA_DIR;

std::string text_of(const std::vector<ccc_symbol>& word) {
  std::string out;
  for (ccc_symbol s : word) out.push_back(ccc_symbol_char(s));
  return out;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(ccc_status_name(CCC_OK)) == "ok");
  CHECK(std::string(ccc_status_name(CCC_ERROR_FORMAT)) == "format error");
  int32_t length = 0;
  CHECK(ccc_codeword_length(1, &length) == CCC_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(ccc_last_error_message()).find("at least 2") != std::string::npos);
  CHECK(ccc_codeword_length(16, &length) == CCC_OK);
  CHECK(length == 5);
  CHECK(std::string(ccc_last_error_message()).empty());
  CHECK(ccc_codeword_length(16, nullptr) == CCC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  int32_t length = 0;
  CHECK(ccc_codeword_length(0, &length) == CCC_ERROR_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = ccc_last_error_message(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(ccc_last_error_message()).empty());
}

TEST_CASE("encode and decode") {
  std::vector<ccc_symbol> word(5);
  CHECK(ccc_encode(7, 5, word.data(), word.size()) == CCC_OK);
  CHECK(text_of(word) == "1111i");
  CHECK(ccc_encode(7, 5, word.data(), 4) == CCC_ERROR_DIMENSION);
  CHECK(ccc_encode(17, 5, word.data(), word.size()) == CCC_ERROR_INVALID_ARGUMENT);

  int32_t index = 0;
  CHECK(ccc_decode(word.data(), word.size(), &index) == CCC_OK);
  CHECK(index == 7);
  const ccc_symbol bad[] = {0, 1, 0};
  CHECK(ccc_decode(bad, 3, &index) == CCC_ERROR_INVALID_CODEWORD);
  const ccc_symbol out_of_alphabet[] = {4};
  CHECK(ccc_decode(out_of_alphabet, 1, &index) == CCC_ERROR_INVALID_ARGUMENT);

  std::vector<ccc_symbol> parsed(8);
  size_t n = 0;
  CHECK(ccc_parse_symbols("iiuu", parsed.data(), parsed.size(), &n) == CCC_OK);
  CHECK(n == 4);
  CHECK(parsed[3] == CCC_SYMBOL_ONE_PLUS_I);
  CHECK(ccc_parse_symbols("iz", parsed.data(), parsed.size(), &n) == CCC_ERROR_FORMAT);
  CHECK(ccc_symbol_char(9) == '?');
}

TEST_CASE("samples and network through handles") {
  ccc_samples* samples = nullptr;
  REQUIRE(ccc_samples_load((kData + "/example2.txt").c_str(), &samples) == CCC_OK);
  CHECK(ccc_samples_count(samples) == 3);
  CHECK(ccc_samples_input_width(samples) == 5);
  CHECK(ccc_samples_output_count(samples) == 2);

  ccc_network* net = nullptr;
  REQUIRE(ccc_network_train(samples, 0, &net) == CCC_OK);
  CHECK(ccc_network_hidden_count(net) == 3);
  CHECK(ccc_network_radius(net) == 0);

  int8_t re[5];
  int8_t im[5];
  int32_t s = 0;
  int32_t bias = 0;
  CHECK(ccc_network_hidden_unit(net, 0, re, im, 5, &s, &bias) == CCC_OK);
  CHECK(s == 5);
  CHECK(bias == -4);
  CHECK(re[0] == -1);
  CHECK(im[4] == 1);
  CHECK(ccc_network_hidden_unit(net, 3, nullptr, nullptr, 0, &s, nullptr) ==
        CCC_ERROR_INVALID_ARGUMENT);

  int8_t w = 0;
  CHECK(ccc_network_output_weight(net, 1, 0, &w) == CCC_OK);
  CHECK(w == -1);

  const ccc_symbol x[] = {CCC_SYMBOL_ONE, CCC_SYMBOL_ONE, CCC_SYMBOL_I, CCC_SYMBOL_ZERO,
                          CCC_SYMBOL_ONE};
  int32_t z[3];
  CHECK(ccc_network_hidden_inputs(net, x, 5, z, 3) == CCC_OK);
  CHECK(z[0] == -4);
  CHECK(z[1] == -5);
  CHECK(z[2] == 1);
  uint8_t y[2];
  CHECK(ccc_network_forward(net, x, 5, y, 2) == CCC_OK);
  CHECK(y[0] == 1);
  CHECK(y[1] == 0);
  CHECK(ccc_network_forward(net, x, 4, y, 2) == CCC_ERROR_DIMENSION);
  CHECK(ccc_network_forward(net, x, 5, y, 1) == CCC_ERROR_DIMENSION);

  ccc_network_free(net);
  ccc_samples_free(samples);
  ccc_network_free(nullptr);
}

TEST_CASE("train from arrays and distance") {
  const ccc_symbol inputs[] = {2, 2, 2, 3, 3, 2, 3, 3};
  const uint8_t targets[] = {0, 1, 1, 0};
  ccc_network* net = nullptr;
  REQUIRE(ccc_network_train_arrays(inputs, targets, 4, 2, 1, 0, &net) == CCC_OK);
  uint8_t y = 9;
  CHECK(ccc_network_forward(net, inputs + 2, 2, &y, 1) == CCC_OK);
  CHECK(y == 1);
  ccc_network_free(net);

  CHECK(ccc_network_train_arrays(inputs, targets, 0, 2, 1, 0, &net) ==
        CCC_ERROR_INVALID_ARGUMENT);

  int32_t d = -1;
  CHECK(ccc_hamming_distance(inputs, inputs + 2, 2, &d) == CCC_OK);
  CHECK(d == 1);
}

TEST_CASE("sample parse errors surface as format errors") {
  ccc_samples* samples = nullptr;
  CHECK(ccc_samples_parse("i u -> 1\ni q -> 0\n", &samples) == CCC_ERROR_FORMAT);
  CHECK(std::string(ccc_last_error_message()).find("line 2") != std::string::npos);
  CHECK(ccc_samples_load("/no/such/file", &samples) == CCC_ERROR_IO);

  REQUIRE(ccc_samples_parse("", &samples) == CCC_OK);
  ccc_network* net = nullptr;
  CHECK(ccc_network_train(samples, 0, &net) == CCC_ERROR_INVALID_ARGUMENT);
  ccc_samples_free(samples);
}

TEST_CASE("spiral experiment") {
  ccc_pattern* pattern = nullptr;
  REQUIRE(ccc_pattern_load((kData + "/spiral.txt").c_str(), &pattern) == CCC_OK);
  ccc_plan* plan = nullptr;
  REQUIRE(ccc_plan_sample(pattern, 45, 30, 42, &plan) == CCC_OK);
  CHECK(ccc_plan_count(plan) == 75);
  int32_t row = 0;
  int32_t col = 0;
  CHECK(ccc_plan_point(plan, 74, &row, &col) == CCC_OK);
  uint8_t bit = 1;
  CHECK(ccc_pattern_cell(pattern, row, col, &bit) == CCC_OK);
  CHECK(bit == 0);  // white draws come last

  ccc_spiral_report* report = nullptr;
  REQUIRE(ccc_spiral_run(pattern, plan, 2, &report) == CCC_OK);
  CHECK(ccc_spiral_report_classified(report) + ccc_spiral_report_misclassified(report) == 256);
  CHECK(ccc_spiral_report_prediction(report, 17, 1, &bit) == CCC_ERROR_INVALID_ARGUMENT);

  ccc_spiral_report_free(report);
  ccc_plan_free(plan);
  CHECK(ccc_plan_sample(pattern, 300, 0, 1, &plan) == CCC_ERROR_INVALID_ARGUMENT);
  ccc_pattern_free(pattern);
  CHECK(ccc_pattern_parse("###\n", &pattern) == CCC_ERROR_FORMAT);
}

TEST_CASE("Mackey-Glass experiment") {
  ccc_mg_params params;
  ccc_mg_default_params(&params);
  CHECK(params.alpha == 3.0);
  CHECK(params.beta == 1.0005);
  CHECK(params.tau == 3);
  CHECK(params.seed_count == 4);

  ccc_series* series = nullptr;
  REQUIRE(ccc_mg_generate(&params, &series) == CCC_OK);
  CHECK(ccc_series_length(series) == 200);
  double x5 = 0.0;
  CHECK(ccc_series_value(series, 5, &x5) == CCC_OK);
  CHECK(x5 == doctest::Approx(0.3635278058).epsilon(1e-9));
  CHECK(ccc_series_value(series, 0, &x5) == CCC_ERROR_INVALID_ARGUMENT);

  ccc_mg_result* result = nullptr;
  REQUIRE(ccc_mg_run(series, 5, &result) == CCC_OK);
  CHECK(ccc_mg_result_prediction_count(result) == 21);
  CHECK(ccc_mg_result_trace_count(result) == 175);
  ccc_mg_prediction p;
  CHECK(ccc_mg_result_prediction(result, 0, &p) == CCC_OK);
  CHECK(p.position == 180);
  CHECK(ccc_mg_result_prediction(result, 21, &p) == CCC_ERROR_INVALID_ARGUMENT);
  CHECK(ccc_mg_result_nmse(result) < 0.1);
  CHECK(ccc_mg_result_nmse_centered(result) > ccc_mg_result_nmse(result));
  ccc_mg_result_free(result);
  ccc_series_free(series);

  CHECK(ccc_mg_quantize(0.0) == 9);
  double c = 0.0;
  CHECK(ccc_mg_dequantize(16, &c) == CCC_OK);
  CHECK(c == 1.875);
  CHECK(ccc_mg_dequantize(0, &c) == CCC_ERROR_INVALID_ARGUMENT);

  params.seed_count = 3;
  CHECK(ccc_mg_generate(&params, &series) == CCC_ERROR_INVALID_ARGUMENT);
}
