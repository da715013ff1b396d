// Copyright 2026 The qimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qimg/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <thread>

#include "qimg/baseline/mlp.hpp"
#include "qimg/common/rng.hpp"
#include "qimg/encoders/neqr.hpp"
#include "qimg/encoders/threshold.hpp"
#include "qimg/imgdata/idx.hpp"
#include "qimg/imgdata/image.hpp"
#include "qimg/imgdata/pca.hpp"
#include "qimg/qnn/model.hpp"
#include "qimg/qnn/train.hpp"
#include "qimg/qsim/gate.hpp"

namespace qimg::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw CliError("bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "on" || text == "1") return true;
  if (text == "false" || text == "off" || text == "0") return false;
  throw CliError("bad boolean for " + std::string(key) + ": '" + std::string(text) + "'");
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write " + path.string());
  out << text;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string features_csv(const imgdata::LabeledDataset& data, const std::vector<std::vector<double>>& features) {
  std::string out;
  for (std::size_t i = 0; i < features.size(); ++i) {
    out += std::to_string(data.labels[i]);
    for (double f : features[i]) out += "," + fmt_double(f);
    out += "\n";
  }
  return out;
}

std::vector<std::vector<double>> parse_features_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    std::vector<double> row;
    for (std::size_t i = 1; i < fields.size(); ++i) row.push_back(std::stod(fields[i]));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Keeps the top q bits of 8-bit pixels.
imgdata::GrayImage requantized(imgdata::GrayImage image, int q) {
  if (q < 1) throw CliError("q must be >= 1");
  if (q < 8) {
    for (auto& p : image.pixels) p = static_cast<std::uint8_t>(p >> (8 - q));
  }
  return image;
}

std::vector<qsim::GateKind> parse_layers(std::string_view text) {
  std::vector<qsim::GateKind> kinds;
  for (const auto& name : split(text, ',')) {
    const auto kind = qsim::gate_kind_from_name(name);
    if (!kind || !qsim::is_two_qubit_ising(*kind)) throw CliError("layer gates must be XX, YY, or ZZ, got '" + name + "'");
    kinds.push_back(*kind);
  }
  return kinds;
}

std::vector<std::vector<double>> pixel_vectors(const imgdata::LabeledDataset& data) {
  std::vector<std::vector<double>> out;
  out.reserve(data.size());
  for (const auto& img : data.images) out.push_back(imgdata::normalized(img));
  return out;
}

}  // namespace

ConfigMap parse_config(std::string_view text) {
  ConfigMap out;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw CliError("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw CliError("config line " + std::to_string(line_no) + ": empty key");
    out[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

ConfigMap read_config_file(const fs::path& path) { return parse_config(read_text(path)); }

fs::path default_data_dir() {
  const char* env = std::getenv("QIMG_DATA_DIR");
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::path("data");
}

PrepareOptions PrepareOptions::with_data_dir(const fs::path& dir) {
  PrepareOptions o;
  o.train_images = dir / "train-images-idx3-ubyte";
  o.train_labels = dir / "train-labels-idx1-ubyte";
  o.test_images = dir / "t10k-images-idx3-ubyte";
  o.test_labels = dir / "t10k-labels-idx1-ubyte";
  return o;
}

std::string prepare_data(const PrepareOptions& o) {
  if (o.subsample_train == 0 || o.subsample_test == 0) throw CliError("subsample sizes must be positive");
  if (o.width < 1 || o.height < 1) throw CliError("image size must be positive");
  for (const auto& p : {o.train_images, o.train_labels, o.test_images, o.test_labels}) {
    if (!fs::exists(p)) throw CliError("missing input file " + p.string());
  }
  auto load = [](const fs::path& images, const fs::path& labels, const std::string& name) {
    const auto imgs = imgdata::parse_idx_images(imgdata::read_file_bytes(images));
    const auto labs = imgdata::parse_idx_labels(imgdata::read_file_bytes(labels));
    if (imgs.size() != labs.size()) throw CliError(name + ": image and label counts differ");
    return imgdata::filter_binary(imgs, labs, 0, 3, name);
  };
  const auto train_full = load(o.train_images, o.train_labels, "train");
  const auto test_full = load(o.test_images, o.test_labels, "test");
  if (o.subsample_train > train_full.size() || o.subsample_test > test_full.size()) {
    throw CliError("subsample larger than the filtered split");
  }
  const auto train_sub = imgdata::subsample(train_full, o.subsample_train, o.seed);
  const auto test_sub = imgdata::subsample(test_full, o.subsample_test, o.seed + 1);
  const auto train_small = imgdata::downscale(train_sub, o.width, o.height);
  const auto test_small = imgdata::downscale(test_sub, o.width, o.height);

  fs::create_directories(o.out);
  write_text(o.out / "train.records", imgdata::to_records(train_small));
  write_text(o.out / "test.records", imgdata::to_records(test_small));

  json manifest;
  manifest["command"] = "prepare-data";
  manifest["sources"] = {{"train_images", o.train_images.string()},
                         {"train_labels", o.train_labels.string()},
                         {"test_images", o.test_images.string()},
                         {"test_labels", o.test_labels.string()}};
  manifest["classes"] = {{"positive", 0}, {"negative", 3}};
  manifest["filtered"] = {{"train", train_full.size()}, {"test", test_full.size()}};
  manifest["subsample"] = {{"train", o.subsample_train}, {"test", o.subsample_test}};
  manifest["seed"] = o.seed;
  manifest["subsample_seeds"] = {{"train", o.seed}, {"test", o.seed + 1}};
  manifest["source_size"] = {{"width", train_sub.images.front().width}, {"height", train_sub.images.front().height}};
  manifest["size"] = {{"width", o.width}, {"height", o.height}};
  manifest["downscale"] = "area-weighted mean, round half up";
  std::vector<std::string> files{"train.records", "test.records"};

  if (o.pca_k > 0) {
    const auto train_px = pixel_vectors(train_sub);
    const auto model = imgdata::pca_fit(train_px, o.pca_k);
    std::vector<std::vector<double>> train_f, test_f;
    for (const auto& x : train_px) train_f.push_back(imgdata::pca_transform(model, x));
    for (const auto& x : pixel_vectors(test_sub)) test_f.push_back(imgdata::pca_transform(model, x));
    write_text(o.out / "train_pca.csv", features_csv(train_sub, train_f));
    write_text(o.out / "test_pca.csv", features_csv(test_sub, test_f));
    json pca;
    pca["k"] = o.pca_k;
    pca["mean"] = model.mean;
    pca["components"] = model.components;
    pca["explained_variance"] = model.explained_variance;
    pca["rank_deficient"] = model.rank_deficient;
    write_text(o.out / "pca.json", pca.dump(2) + "\n");
    manifest["pca"] = {{"k", o.pca_k}, {"fit_on", "train subsample, full-resolution pixels / 255"},
                       {"rank_deficient", model.rank_deficient}};
    files.insert(files.end(), {"train_pca.csv", "test_pca.csv", "pca.json"});
  } else {
    manifest["pca"] = nullptr;
  }
  manifest["files"] = files;
  const std::string text = manifest.dump(2) + "\n";
  write_text(o.out / "manifest.json", text);
  return text;
}

PreparedData load_prepared(const fs::path& dir) {
  PreparedData d;
  d.train = imgdata::from_records(read_text(dir / "train.records"), "train");
  d.test = imgdata::from_records(read_text(dir / "test.records"), "test");
  if (fs::exists(dir / "train_pca.csv")) {
    d.train_pca = parse_features_csv(read_text(dir / "train_pca.csv"));
    d.test_pca = parse_features_csv(read_text(dir / "test_pca.csv"));
  }
  return d;
}

ModelKind model_from_name(std::string_view name) {
  if (name == "qnn") return ModelKind::kQnn;
  if (name == "qnn-neqr") return ModelKind::kQnnNeqr;
  if (name == "classical") return ModelKind::kClassical;
  throw CliError("unknown model '" + std::string(name) + "' (expected qnn, qnn-neqr, classical)");
}

std::string_view model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kQnn:
      return "qnn";
    case ModelKind::kQnnNeqr:
      return "qnn-neqr";
    case ModelKind::kClassical:
      return "classical";
  }
  return "?";
}

std::vector<std::string> train_config_keys() {
  return {"epochs",  "runs",    "seed",     "batch_size", "optimizer", "learning_rate",      "beta1",
          "beta2",   "epsilon", "gradient", "layers",     "readout",   "share_layer_params", "q",
          "hidden",  "features"};
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

namespace {

struct ResolvedConfig {
  int epochs = 20;
  int runs = 10;
  std::uint64_t seed = 0;
  std::optional<int> batch_size;
  OptimizerConfig optimizer;
  bool lr_set = false;
  qnn::GradientMethod gradient = qnn::GradientMethod::kAdjoint;
  std::vector<qsim::GateKind> layers{qsim::GateKind::XX, qsim::GateKind::ZZ};
  qnn::ModelOptions model_options;
  int q = 8;
  int hidden = 32;
  bool pca_features = false;
};

ResolvedConfig resolve(const ConfigMap& config) {
  const auto known = train_config_keys();
  ResolvedConfig r;
  for (const auto& [key, value] : config) {
    if (std::find(known.begin(), known.end(), key) == known.end()) throw CliError("unknown config key '" + key + "'");
    if (key == "epochs") {
      r.epochs = parse_number<int>(key, value);
    } else if (key == "runs") {
      r.runs = parse_number<int>(key, value);
    } else if (key == "seed") {
      r.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "batch_size") {
      r.batch_size = parse_number<int>(key, value);
    } else if (key == "optimizer") {
      try {
        r.optimizer.kind = optimizer_from_name(value);
      } catch (const std::exception& e) {
        throw CliError(e.what());
      }
    } else if (key == "learning_rate") {
      r.optimizer.learning_rate = parse_number<double>(key, value);
      r.lr_set = true;
    } else if (key == "beta1") {
      r.optimizer.beta1 = parse_number<double>(key, value);
    } else if (key == "beta2") {
      r.optimizer.beta2 = parse_number<double>(key, value);
    } else if (key == "epsilon") {
      r.optimizer.epsilon = parse_number<double>(key, value);
    } else if (key == "gradient") {
      if (value == "adjoint") {
        r.gradient = qnn::GradientMethod::kAdjoint;
      } else if (value == "parameter_shift") {
        r.gradient = qnn::GradientMethod::kParameterShift;
      } else {
        throw CliError("gradient must be adjoint or parameter_shift");
      }
    } else if (key == "layers") {
      r.layers = parse_layers(value);
    } else if (key == "readout") {
      try {
        r.model_options.readout = qnn::readout_from_name(value);
      } catch (const std::exception& e) {
        throw CliError(e.what());
      }
    } else if (key == "share_layer_params") {
      r.model_options.share_layer_params = parse_bool(key, value);
    } else if (key == "q") {
      r.q = parse_number<int>(key, value);
    } else if (key == "hidden") {
      r.hidden = parse_number<int>(key, value);
    } else if (key == "features") {
      if (value != "pixels" && value != "pca") throw CliError("features must be pixels or pca");
      r.pca_features = value == "pca";
    }
  }
  if (r.epochs < 1) throw CliError("epochs must be >= 1");
  if (r.runs < 1) throw CliError("runs must be >= 1");
  if (!(r.optimizer.learning_rate > 0)) throw CliError("learning_rate must be > 0");
  return r;
}

// Runs `count` jobs over at most `jobs` threads; rethrows the first failure.
template <typename F>
void parallel_for(int count, int jobs, F&& body) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, count);
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

RunSummary train_runs(const TrainOptions& options) {
  const ResolvedConfig cfg = resolve(options.config);
  const PreparedData data = load_prepared(options.data);
  if (data.train.empty()) throw CliError("prepared training set is empty");
  if (cfg.pca_features && data.train_pca.empty()) throw CliError("features=pca needs data prepared with --pca");
  if (cfg.pca_features && options.model == ModelKind::kQnnNeqr) throw CliError("qnn-neqr encodes pixels only");

  RunSummary summary;
  summary.reports.resize(static_cast<std::size_t>(cfg.runs));
  const std::string features = cfg.pca_features ? "pca" : "pixels";

  if (options.model == ModelKind::kClassical) {
    auto vectors = [&](const imgdata::LabeledDataset& d, const std::vector<std::vector<double>>& pca) {
      return cfg.pca_features ? pca : pixel_vectors(d);
    };
    const auto train_x = vectors(data.train, data.train_pca);
    const auto test_x = vectors(data.test, data.test_pca);
    baseline::MlpTrainConfig mc;
    mc.epochs = cfg.epochs;
    if (cfg.batch_size) mc.batch_size = *cfg.batch_size;
    const double lr = mc.optimizer.learning_rate;
    mc.optimizer = cfg.optimizer;
    if (!cfg.lr_set) mc.optimizer.learning_rate = lr;
    const std::vector<int> sizes{static_cast<int>(train_x.front().size()), cfg.hidden, 1};
    parallel_for(cfg.runs, options.jobs, [&](int run) {
      auto rc = mc;
      rc.seed = cfg.seed + static_cast<std::uint64_t>(run);
      auto result = baseline::mlp_train(baseline::MlpModel::initialized(sizes, rc.seed), train_x, data.train.labels,
                                        test_x, data.test.labels, rc);
      result.report.config["hidden"] = std::to_string(cfg.hidden);
      summary.reports[run] = std::move(result.report);
    });
  } else {
    const bool neqr = options.model == ModelKind::kQnnNeqr;
    auto circuits = [&](const imgdata::LabeledDataset& d, const std::vector<std::vector<double>>& pca) {
      std::vector<qsim::Circuit> out;
      out.reserve(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (neqr) {
          try {
            out.push_back(encoders::neqr_encode(requantized(d.images[i], cfg.q), cfg.q));
          } catch (const encoders::NeqrError& e) {
            throw CliError(e.what());
          }
        } else if (cfg.pca_features) {
          out.push_back(encoders::threshold_encode(imgdata::binarize(pca[i])));
        } else {
          out.push_back(encoders::threshold_encode(imgdata::binarize(d.images[i])));
        }
      }
      return out;
    };
    const auto train_c = circuits(data.train, data.train_pca);
    const auto test_c = circuits(data.test, data.test_pca);
    const auto model = qnn::build_model(train_c.front().num_qubits(), cfg.layers, cfg.model_options);
    qnn::TrainConfig tc;
    tc.epochs = cfg.epochs;
    if (cfg.batch_size) tc.batch_size = *cfg.batch_size;
    const double lr = tc.optimizer.learning_rate;
    tc.optimizer = cfg.optimizer;
    if (!cfg.lr_set) tc.optimizer.learning_rate = lr;
    tc.gradient = cfg.gradient;
    parallel_for(cfg.runs, options.jobs, [&](int run) {
      auto rc = tc;
      rc.seed = cfg.seed + static_cast<std::uint64_t>(run);
      auto result = qnn::train(model, train_c, data.train.labels, test_c, data.test.labels, rc);
      if (neqr) result.report.config["q"] = std::to_string(cfg.q);
      summary.reports[run] = std::move(result.report);
    });
  }

  fs::create_directories(options.out);
  std::vector<double> accs, losses;
  json seeds = json::array();
  for (std::size_t run = 0; run < summary.reports.size(); ++run) {
    auto& report = summary.reports[run];
    report.config["model"] = std::string(model_name(options.model));
    report.config["features"] = features;
    report.config["train_size"] = std::to_string(data.train.size());
    report.config["test_size"] = std::to_string(data.test.size());
    char name[32];
    std::snprintf(name, sizeof name, "run_%03zu.json", run);
    write_text(options.out / name, to_json(report) + "\n");
    accs.push_back(report.final_test_acc);
    losses.push_back(report.final_train_loss);
    seeds.push_back(report.seed);
  }
  std::tie(summary.mean, summary.std) = mean_std(accs);
  const auto [loss_mean, loss_std] = mean_std(losses);
  json s;
  s["model"] = std::string(model_name(options.model));
  s["runs"] = cfg.runs;
  s["seeds"] = seeds;
  s["final_test_acc"] = {{"mean", summary.mean}, {"std", summary.std}, {"values", accs}};
  s["final_train_loss"] = {{"mean", loss_mean}, {"std", loss_std}, {"values", losses}};
  write_text(options.out / "summary.json", s.dump(2) + "\n");
  return summary;
}

std::vector<encoders::ResourceRow> resource_rows(const ResourceOptions& options) {
  if (options.q < 1 || options.q > 16) throw CliError("q must be in [1, 16]");
  std::vector<encoders::ResourceRow> rows;
  for (int side : options.sizes) {
    if (side < 1 || (side & (side - 1)) != 0) throw CliError("size " + std::to_string(side) + " is not a power of two");
    Rng rng(options.seed + static_cast<std::uint64_t>(side));
    std::vector<std::uint8_t> px(static_cast<std::size_t>(side) * side);
    for (auto& p : px) p = static_cast<std::uint8_t>(rng.below(std::min(256, 1 << options.q)));
    const imgdata::GrayImage img(side, side, std::move(px));
    auto circuit = encoders::neqr_encode(img, options.q);
    if (options.compress) circuit = encoders::neqr_compress(circuit, encoders::NeqrSpec::for_image(img, options.q));
    rows.push_back({side, options.q, options.compress, encoders::resource_report(circuit)});
  }
  return rows;
}

std::string resource_csv(const std::vector<encoders::ResourceRow>& rows) {
  std::string out = encoders::resource_csv_header() + "\n";
  for (const auto& row : rows) out += encoders::to_csv_row(row) + "\n";
  return out;
}

qsim::Circuit dump_circuit(const DumpOptions& o) {
  if (o.what == "qnn-model") {
    const auto kinds = parse_layers(o.layers);
    try {
      return qnn::build_model(o.data_qubits, kinds, {qnn::readout_from_name(o.readout), false}).circuit();
    } catch (const std::invalid_argument& e) {
      throw CliError(e.what());
    }
  }
  const auto side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(o.pixels.size()))));
  if (o.pixels.empty() || static_cast<std::size_t>(side) * side != o.pixels.size()) {
    throw CliError("pixels must form a non-empty square image");
  }
  const imgdata::GrayImage img(side, side, o.pixels);
  if (o.what == "threshold") return encoders::threshold_encode(imgdata::binarize(img));
  if (o.what == "neqr") {
    try {
      const auto gray = requantized(img, o.q);
      auto c = encoders::neqr_encode(gray, o.q);
      return o.compress ? encoders::neqr_compress(c, encoders::NeqrSpec::for_image(gray, o.q)) : c;
    } catch (const encoders::NeqrError& e) {
      throw CliError(e.what());
    }
  }
  throw CliError("unknown circuit '" + o.what + "' (expected neqr, threshold, qnn-model)");
}

}  // namespace qimg::cli
