// Command-line front end. Everything goes through the C interface in
// ccc/ccc.h; this file only parses flags and formats output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccc/ccc.h"
#include "svg_plot.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 1;

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

void check(ccc_status status) {
  if (status == CCC_OK) return;
  const int code = status == CCC_ERROR_INTERNAL ? kExitInternal : kExitUsage;
  throw CliError(code, std::string(ccc_status_name(status)) + ": " + ccc_last_error_message());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Samples = Handle<ccc_samples, ccc_samples_free>;
using Net = Handle<ccc_network, ccc_network_free>;
using Pattern = Handle<ccc_pattern, ccc_pattern_free>;
using Plan = Handle<ccc_plan, ccc_plan_free>;
using SpiralReport = Handle<ccc_spiral_report, ccc_spiral_report_free>;
using Series = Handle<ccc_series, ccc_series_free>;
using MgResult = Handle<ccc_mg_result, ccc_mg_result_free>;

std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string symbol_name(ccc_symbol s) {
  switch (s) {
    case CCC_SYMBOL_ZERO: return "0";
    case CCC_SYMBOL_ONE: return "1";
    case CCC_SYMBOL_I: return "i";
    case CCC_SYMBOL_ONE_PLUS_I: return "1+i";
    default: return "?";
  }
}

std::string complex_weight(int re, int im) {
  return std::to_string(re) + (im > 0 ? "+i" : "-i");
}

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep,
                 std::string (*fmt)(T)) {
  std::string out;
  for (std::size_t j = 0; j < items.size(); ++j) {
    if (j) out += sep;
    out += fmt(items[j]);
  }
  return out;
}

std::string bits_string(const std::vector<uint8_t>& bits) {
  std::string out;
  for (uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(kExitUsage, "cannot write " + path.string());
  out << content;
  if (!out) throw CliError(kExitInternal, "write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CliError(kExitUsage, "cannot create " + dir.string() + ": " + ec.message());
}

// ---- encode

int cmd_encode(int count, std::optional<int> index) {
  int32_t length = 0;
  check(ccc_codeword_length(count, &length));
  std::vector<ccc_symbol> word(static_cast<std::size_t>(length));
  auto render = [&](int k) {
    check(ccc_encode(k, length, word.data(), word.size()));
    std::string text;
    for (ccc_symbol s : word) text.push_back(ccc_symbol_char(s));
    return text;
  };
  if (index) {
    if (*index < 1 || *index > count) {
      throw CliError(kExitUsage, "--index must lie in 1.." + std::to_string(count));
    }
    std::cout << render(*index) << "\n";
    return 0;
  }
  std::cout << "index,codeword\n";
  for (int k = 1; k <= count; ++k) std::cout << k << "," << render(k) << "\n";
  return 0;
}

// ---- run

struct SampleRows {
  std::vector<std::vector<ccc_symbol>> inputs;
  std::vector<std::vector<uint8_t>> targets;
};

SampleRows read_rows(const ccc_samples* set) {
  SampleRows rows;
  const std::size_t n = ccc_samples_count(set);
  const std::size_t d = ccc_samples_input_width(set);
  const std::size_t k = ccc_samples_output_count(set);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<ccc_symbol> in(d);
    std::vector<uint8_t> t(k);
    check(ccc_samples_get(set, m, in.data(), in.size(), t.data(), t.size()));
    rows.inputs.push_back(std::move(in));
    rows.targets.push_back(std::move(t));
  }
  return rows;
}

std::string trace_table(const ccc_network* net, const SampleRows& eval) {
  const std::size_t d = ccc_network_input_width(net);
  const std::size_t h = ccc_network_hidden_count(net);
  const std::size_t k = ccc_network_output_count(net);
  std::ostringstream out;

  out << "# hidden units (r=" << ccc_network_radius(net) << ")\n";
  out << "unit,stored,s,weights,bias_weight,output_weights\n";
  std::vector<int8_t> re(d);
  std::vector<int8_t> im(d);
  for (std::size_t m = 0; m < h; ++m) {
    int32_t s = 0;
    int32_t bias = 0;
    check(ccc_network_hidden_unit(net, m, re.data(), im.data(), d, &s, &bias));
    std::string stored;
    std::string weights;
    for (std::size_t j = 0; j < d; ++j) {
      if (j) {
        stored += ' ';
        weights += ' ';
      }
      // a +1 weight part marks a 1 bit in the stored vector
      stored += symbol_name(static_cast<ccc_symbol>((re[j] > 0 ? 1 : 0) | (im[j] > 0 ? 2 : 0)));
      weights += complex_weight(re[j], im[j]);
    }
    std::string ow;
    for (std::size_t j = 0; j < k; ++j) {
      int8_t w = 0;
      check(ccc_network_output_weight(net, m, j, &w));
      if (j) ow += ' ';
      ow += std::to_string(w);
    }
    out << "H" << m + 1 << "," << stored << "," << s << "," << weights << "," << bias << "," << ow << "\n";
  }

  out << "\n# evaluation\n";
  out << "input,bias_input";
  for (std::size_t m = 0; m < h; ++m) out << ",in_H" << m + 1;
  for (std::size_t m = 0; m < h; ++m) out << ",out_H" << m + 1;
  for (std::size_t j = 0; j < k; ++j) out << ",y" << j + 1;
  out << "\n";

  std::vector<int32_t> z(h);
  std::vector<uint8_t> y(k);
  for (const auto& x : eval.inputs) {
    check(ccc_network_hidden_inputs(net, x.data(), x.size(), z.data(), z.size()));
    check(ccc_network_forward(net, x.data(), x.size(), y.data(), y.size()));
    out << join<ccc_symbol>(x, " ", [](ccc_symbol s) { return symbol_name(s); }) << ",1";
    for (int32_t v : z) out << "," << v;
    for (int32_t v : z) out << "," << (v > 0 ? 1 : 0);
    for (uint8_t b : y) out << "," << static_cast<int>(b);
    out << "\n";
  }
  return out.str();
}

std::string output_table(const ccc_network* net, const SampleRows& eval) {
  const std::size_t k = ccc_network_output_count(net);
  const bool with_expected = !eval.targets.empty() && !eval.targets.front().empty();
  std::ostringstream out;
  out << "input,output" << (with_expected ? ",expected" : "") << "\n";
  std::vector<uint8_t> y(k);
  for (std::size_t m = 0; m < eval.inputs.size(); ++m) {
    const auto& x = eval.inputs[m];
    check(ccc_network_forward(net, x.data(), x.size(), y.data(), y.size()));
    std::string compact;
    for (ccc_symbol s : x) compact.push_back(ccc_symbol_char(s));
    out << compact << "," << bits_string(y);
    if (with_expected) out << "," << bits_string(eval.targets[m]);
    out << "\n";
  }
  return out.str();
}

int cmd_run(const std::string& samples_path, const std::string& eval_path,
            const std::vector<int>& radii, bool trace, const std::string& out_path) {
  if (radii.size() > 1) throw CliError(kExitUsage, "run takes a single --r value");
  const int radius = radii.empty() ? 0 : radii.front();

  ccc_samples* raw = nullptr;
  check(ccc_samples_load(samples_path.c_str(), &raw));
  Samples training(raw);
  ccc_network* net_raw = nullptr;
  check(ccc_network_train(training.get(), radius, &net_raw));
  Net net(net_raw);

  Samples eval_set;
  const ccc_samples* eval_source = training.get();
  if (!eval_path.empty()) {
    raw = nullptr;
    check(ccc_samples_load(eval_path.c_str(), &raw));
    eval_set.reset(raw);
    eval_source = eval_set.get();
  }
  const SampleRows eval = read_rows(eval_source);
  const std::string text = trace ? trace_table(net.get(), eval) : output_table(net.get(), eval);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

// ---- spiral

constexpr int kGrid = 16;

std::string render_predictions(const ccc_spiral_report* report) {
  std::string text;
  for (int r = 1; r <= kGrid; ++r) {
    for (int c = 1; c <= kGrid; ++c) {
      uint8_t bit = 0;
      check(ccc_spiral_report_prediction(report, r, c, &bit));
      text.push_back(bit ? '#' : '.');
    }
    text.push_back('\n');
  }
  return text;
}

std::string render_samples(const ccc_pattern* pattern, const ccc_plan* plan) {
  std::vector<std::string> rows(kGrid, std::string(kGrid, '.'));
  for (int r = 1; r <= kGrid; ++r) {
    for (int c = 1; c <= kGrid; ++c) {
      uint8_t bit = 0;
      check(ccc_pattern_cell(pattern, r, c, &bit));
      rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = bit ? '#' : '.';
    }
  }
  for (std::size_t i = 0; i < ccc_plan_count(plan); ++i) {
    int32_t r = 0;
    int32_t c = 0;
    check(ccc_plan_point(plan, i, &r, &c));
    uint8_t bit = 0;
    check(ccc_pattern_cell(pattern, r, c, &bit));
    rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = bit ? '+' : 'o';
  }
  std::string text;
  for (const auto& row : rows) text += row + "\n";
  return text;
}

int cmd_spiral(const std::string& pattern_path, int n_black, int n_white, uint64_t seed,
               const std::vector<int>& radii, const std::string& out_dir) {
  ccc_pattern* p_raw = nullptr;
  check(ccc_pattern_load(pattern_path.c_str(), &p_raw));
  Pattern pattern(p_raw);
  ccc_plan* plan_raw = nullptr;
  check(ccc_plan_sample(pattern.get(), n_black, n_white, seed, &plan_raw));
  Plan plan(plan_raw);

  std::ostringstream csv;
  csv << "r,classified,misclassified\n";
  std::vector<std::pair<int, std::string>> grids;
  for (int r : radii) {
    ccc_spiral_report* rep_raw = nullptr;
    check(ccc_spiral_run(pattern.get(), plan.get(), r, &rep_raw));
    SpiralReport report(rep_raw);
    csv << r << "," << ccc_spiral_report_classified(report.get()) << ","
        << ccc_spiral_report_misclassified(report.get()) << "\n";
    grids.emplace_back(r, render_predictions(report.get()));
  }
  std::cout << csv.str();

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    write_file(fs::path(out_dir) / "spiral_counts.csv", csv.str());
    write_file(fs::path(out_dir) / "spiral_samples.txt", render_samples(pattern.get(), plan.get()));
    for (const auto& [r, grid] : grids) {
      write_file(fs::path(out_dir) / ("spiral_r" + std::to_string(r) + ".txt"), grid);
    }
  }
  return 0;
}

// ---- mackey

std::vector<ccc_mg_prediction> collect(const ccc_mg_result* result, bool trace) {
  const std::size_t n = trace ? ccc_mg_result_trace_count(result)
                              : ccc_mg_result_prediction_count(result);
  std::vector<ccc_mg_prediction> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    check(trace ? ccc_mg_result_trace(result, i, &rows[i])
                : ccc_mg_result_prediction(result, i, &rows[i]));
  }
  return rows;
}

std::string prediction_csv(const std::vector<ccc_mg_prediction>& rows) {
  std::ostringstream out;
  out << "k,actual,predicted,region_actual,region_predicted\n";
  for (const auto& p : rows) {
    out << p.position << "," << fixed6(p.actual) << "," << fixed6(p.predicted) << ","
        << p.region_actual << "," << p.region_predicted << "\n";
  }
  return out.str();
}

std::string series_plot(const ccc_series* series, const std::vector<ccc_mg_prediction>& trace,
                        const std::vector<ccc_mg_prediction>& predictions, int radius) {
  constexpr int kShown = 41;  // positions 160..200 for the default run
  const int last = ccc_series_length(series);
  const int first = std::max(1, last - kShown + 1);
  ccc_tool::SeriesPlot plot;
  plot.title = "Mackey-Glass one-step prediction, r = " + std::to_string(radius);
  for (int p = first; p <= last; ++p) {
    double v = 0.0;
    check(ccc_series_value(series, p, &v));
    plot.actual.push_back({p, v});
  }
  for (const auto& t : trace) {
    if (t.position >= first) plot.recalled.push_back({t.position, t.predicted});
  }
  for (const auto& t : predictions) plot.predicted.push_back({t.position, t.predicted});
  return ccc_tool::render_svg(plot);
}

struct MackeyOptions {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  int tau = 0;
  int length = 0;
};

int cmd_mackey(const MackeyOptions& opt, const std::vector<int>& radii, const std::string& out_dir,
               bool svg) {
  if (svg && out_dir.empty()) throw CliError(kExitUsage, "--svg needs --out");
  ccc_mg_params params;
  ccc_mg_default_params(&params);
  params.alpha = opt.alpha;
  params.beta = opt.beta;
  params.gamma = opt.gamma;
  params.tau = opt.tau;
  params.length = opt.length;
  if (static_cast<std::size_t>(opt.tau) + 1 != params.seed_count) {
    throw CliError(kExitUsage, "--tau " + std::to_string(opt.tau) + " needs " +
                                   std::to_string(opt.tau + 1) +
                                   " starting values; only the 4 defaults exist (tau = 3)");
  }
  ccc_series* s_raw = nullptr;
  check(ccc_mg_generate(&params, &s_raw));
  Series series(s_raw);

  std::ostringstream nmse;
  nmse << "r,nmse\n";
  struct Files {
    int r;
    std::string predictions;
    std::string trace;
    std::string svg;
  };
  std::vector<Files> files;
  for (int r : radii) {
    ccc_mg_result* res_raw = nullptr;
    check(ccc_mg_run(series.get(), r, &res_raw));
    MgResult result(res_raw);
    nmse << r << "," << fixed6(ccc_mg_result_nmse(result.get())) << "\n";
    const auto predictions = collect(result.get(), false);
    const auto trace = collect(result.get(), true);
    files.push_back({r, prediction_csv(predictions), prediction_csv(trace),
                     svg ? series_plot(series.get(), trace, predictions, r) : std::string()});
  }
  std::cout << nmse.str();

  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    const fs::path dir(out_dir);
    write_file(dir / "mackey_nmse.csv", nmse.str());
    for (const Files& f : files) {
      const std::string stem = "mackey_r" + std::to_string(f.r);
      write_file(dir / (stem + "_predictions.csv"), f.predictions);
      write_file(dir / (stem + "_trace.csv"), f.trace);
      if (svg) write_file(dir / (stem + ".svg"), f.svg);
    }
  }
  return 0;
}

void check_radii(const std::vector<int>& radii) {
  for (int r : radii) {
    if (r < 0) throw CliError(kExitUsage, "--r values must be nonnegative");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex corner-classification networks: encoding, training and experiments"};
  app.require_subcommand(1);

  int count = 0;
  std::optional<int> index;
  auto* encode = app.add_subcommand("encode", "Print quaternary codewords");
  encode->add_option("--count", count, "Number of integers to represent (>= 2)")->required();
  encode->add_option("--index", index, "Print only this codeword (1-based)");

  std::string samples_path;
  std::string eval_path;
  std::vector<int> run_radii;
  bool trace = false;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Train on a sample file and evaluate");
  run->add_option("--samples", samples_path, "Training samples")->required();
  run->add_option("--eval", eval_path, "Vectors to evaluate (default: the training samples)");
  run->add_option("--r", run_radii, "Radius of generalization")->delimiter(',');
  run->add_flag("--trace", trace, "Print the full weight and activation table");
  run->add_option("--out", run_out, "Write to this file instead of stdout");

  std::string pattern_path = CCC_DEFAULT_PATTERN;
  int n_black = 45;
  int n_white = 30;
  uint64_t seed = 42;
  std::vector<int> spiral_radii{1, 2, 3, 4};
  std::string spiral_out;
  auto* spiral = app.add_subcommand("spiral", "Spiral pattern classification experiment");
  spiral->add_option("--pattern", pattern_path, "16x16 '#'/'.' pattern")->capture_default_str();
  spiral->add_option("--black", n_black, "Training points from the black region")->capture_default_str();
  spiral->add_option("--white", n_white, "Training points from the white region")->capture_default_str();
  spiral->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  spiral->add_option("--r", spiral_radii, "Radii, comma separated")->delimiter(',')->capture_default_str();
  spiral->add_option("--out", spiral_out, "Directory for counts, grids and sample overlay");

  MackeyOptions mg{3.0, 1.0005, 6.0, 3, 200};
  std::vector<int> mg_radii{4, 5, 6, 7, 10};
  std::string mg_out;
  bool svg = false;
  auto* mackey = app.add_subcommand("mackey", "Mackey-Glass time-series prediction experiment");
  mackey->add_option("--alpha", mg.alpha)->capture_default_str();
  mackey->add_option("--beta", mg.beta)->capture_default_str();
  mackey->add_option("--gamma", mg.gamma)->capture_default_str();
  mackey->add_option("--tau", mg.tau)->capture_default_str();
  mackey->add_option("--length", mg.length, "Series length")->capture_default_str();
  mackey->add_option("--r", mg_radii, "Radii, comma separated")->delimiter(',')->capture_default_str();
  mackey->add_option("--out", mg_out, "Directory for prediction, trace and NMSE files");
  mackey->add_flag("--svg", svg, "Also write one SVG plot per radius (needs --out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(count, index);
    if (*run) {
      check_radii(run_radii);
      return cmd_run(samples_path, eval_path, run_radii, trace, run_out);
    }
    if (*spiral) {
      check_radii(spiral_radii);
      return cmd_spiral(pattern_path, n_black, n_white, seed, spiral_radii, spiral_out);
    }
    if (*mackey) {
      check_radii(mg_radii);
      return cmd_mackey(mg, mg_radii, mg_out, svg);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
