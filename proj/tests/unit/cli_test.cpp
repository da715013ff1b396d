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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qimg/cli/commands.hpp"
#include "qimg/qsim/circuit_io.hpp"
#include "synthetic.hpp"

using namespace qimg;
using namespace qimg::cli;
using qimg::testing::TempDir;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Synthetic IDX set: 200 train / 100 test items, so 40 / 20 survive the 0-vs-3 filter.
PrepareOptions synthetic_prepare(const TempDir& dir, std::size_t n_train = 24, std::size_t n_test = 10) {
  qimg::testing::write_synthetic_idx(dir.path(), 200, 100);
  auto o = PrepareOptions::with_data_dir(dir.path());
  o.subsample_train = n_train;
  o.subsample_test = n_test;
  o.width = o.height = 2;  // 5-qubit threshold models keep training fast
  o.out = dir.path() / "prepared";
  return o;
}

}  // namespace

TEST(Config, ParsesKeyValueLines) {
  const auto c = parse_config("# comment\n\nepochs = 3\nlayers=XX,ZZ\n  readout=Y  \n");
  EXPECT_EQ(c, (ConfigMap{{"epochs", "3"}, {"layers", "XX,ZZ"}, {"readout", "Y"}}));
  EXPECT_THROW(parse_config("epochs 3\n"), CliError);
  EXPECT_THROW(parse_config("=3\n"), CliError);
}

TEST(PrepareData, SyntheticFunnelAndDeterministicManifest) {
  TempDir dir("prep");
  auto o = synthetic_prepare(dir);
  const std::string first = prepare_data(o);
  const auto m = nlohmann::json::parse(first);
  EXPECT_EQ(m["filtered"]["train"], 40);
  EXPECT_EQ(m["filtered"]["test"], 20);
  EXPECT_EQ(m["subsample"]["train"], 24);
  const auto data = load_prepared(o.out);
  EXPECT_EQ(data.train.size(), 24u);
  EXPECT_EQ(data.test.size(), 10u);
  EXPECT_EQ(data.train.images.front().width, 2);
  const std::string records = slurp(o.out / "train.records");
  EXPECT_EQ(prepare_data(o), first);
  EXPECT_EQ(slurp(o.out / "manifest.json"), first);
  EXPECT_EQ(slurp(o.out / "train.records"), records);
}

TEST(PrepareData, PcaFiles) {
  TempDir dir("pca");
  auto o = synthetic_prepare(dir);
  o.pca_k = 5;
  prepare_data(o);
  const auto data = load_prepared(o.out);
  ASSERT_EQ(data.train_pca.size(), 24u);
  EXPECT_EQ(data.train_pca.front().size(), 5u);
  EXPECT_EQ(data.test_pca.size(), 10u);
}

TEST(PrepareData, Errors) {
  TempDir dir("prep_err");
  auto o = synthetic_prepare(dir);
  o.subsample_train = 0;
  EXPECT_THROW(prepare_data(o), CliError);
  o.subsample_train = 41;
  EXPECT_THROW(prepare_data(o), CliError);
  o.subsample_train = 10;
  o.train_images = dir.path() / "missing";
  EXPECT_THROW(prepare_data(o), CliError);
  o = synthetic_prepare(dir);
  qimg::testing::write_bytes(o.train_labels, {0, 0, 9, 9});
  EXPECT_THROW(prepare_data(o), imgdata::IdxFormatError);
}

TEST(PrepareData, FashionMnistDefaultsGiveThousandAndTwoHundred) {
  const char* env = std::getenv("QIMG_DATA_DIR");
  if (env == nullptr || !fs::exists(fs::path(env) / "train-images-idx3-ubyte")) {
    GTEST_SKIP() << "QIMG_DATA_DIR does not hold the Fashion-MNIST IDX files";
  }
  TempDir dir("fm");
  auto o = PrepareOptions::with_data_dir(default_data_dir());
  o.out = dir.path();
  const auto m = nlohmann::json::parse(prepare_data(o));
  EXPECT_EQ(m["filtered"]["train"], 12000);
  EXPECT_EQ(m["filtered"]["test"], 2000);
  const auto data = load_prepared(o.out);
  EXPECT_EQ(data.train.size(), 1000u);
  EXPECT_EQ(data.test.size(), 200u);
}

TEST(TrainRuns, SingleRunSummaryEqualsRun) {
  TempDir dir("train1");
  const auto p = synthetic_prepare(dir);
  prepare_data(p);
  for (auto model : {ModelKind::kQnn, ModelKind::kClassical}) {
    TrainOptions t;
    t.model = model;
    t.data = p.out;
    t.out = dir.path() / std::string(model_name(model));
    t.config = {{"epochs", "2"}, {"runs", "1"}, {"seed", "5"}};
    const auto s = train_runs(t);
    ASSERT_EQ(s.reports.size(), 1u);
    EXPECT_EQ(s.mean, s.reports[0].final_test_acc);
    EXPECT_EQ(s.std, 0.0);
    const auto summary = nlohmann::json::parse(slurp(t.out / "summary.json"));
    EXPECT_EQ(summary["final_test_acc"]["mean"].get<double>(), s.mean);
    const auto run = train_report_from_json(slurp(t.out / "run_000.json"));
    EXPECT_EQ(run.seed, 5u);
    EXPECT_EQ(run.config.at("model"), model_name(model));
  }
}

TEST(TrainRuns, SummaryRecomputableAndDeterministic) {
  TempDir dir("train3");
  const auto p = synthetic_prepare(dir);
  prepare_data(p);
  TrainOptions t;
  t.data = p.out;
  t.config = {{"epochs", "2"}, {"runs", "3"}, {"seed", "1"}, {"layers", "XX,ZZ,YY"}, {"batch_size", "8"}};
  t.out = dir.path() / "a";
  t.jobs = 2;
  const auto a = train_runs(t);
  t.out = dir.path() / "b";
  t.jobs = 1;
  const auto b = train_runs(t);
  std::vector<double> accs;
  for (int run = 0; run < 3; ++run) {
    const auto name = "run_00" + std::to_string(run) + ".json";
    const auto ra = train_report_from_json(slurp(dir.path() / "a" / name));
    const auto rb = train_report_from_json(slurp(dir.path() / "b" / name));
    EXPECT_EQ(to_json(ra, false), to_json(rb, false));
    EXPECT_EQ(ra.seed, 1u + run);
    accs.push_back(ra.final_test_acc);
  }
  const auto [mean, sd] = mean_std(accs);
  const auto summary = nlohmann::json::parse(slurp(dir.path() / "a" / "summary.json"));
  EXPECT_NEAR(summary["final_test_acc"]["mean"].get<double>(), mean, 1e-12);
  EXPECT_NEAR(summary["final_test_acc"]["std"].get<double>(), sd, 1e-12);
  EXPECT_EQ(a.mean, b.mean);
}

TEST(TrainRuns, NeqrModelUsesGrayAndPositionQubits) {
  TempDir dir("neqr");
  auto p = synthetic_prepare(dir, 4, 2);
  prepare_data(p);
  TrainOptions t;
  t.model = ModelKind::kQnnNeqr;
  t.data = p.out;
  t.out = dir.path() / "out";
  t.config = {{"epochs", "1"}, {"runs", "1"}, {"q", "4"}};
  const auto s = train_runs(t);
  EXPECT_EQ(s.reports[0].config.at("data_qubits"), "6");  // q + 2n with n = 1
  EXPECT_EQ(s.reports[0].config.at("q"), "4");
}

TEST(TrainRuns, Errors) {
  EXPECT_THROW(model_from_name("cnn"), CliError);
  TempDir dir("train_err");
  const auto p = synthetic_prepare(dir);
  prepare_data(p);
  TrainOptions t;
  t.data = p.out;
  t.out = dir.path() / "out";
  t.config = {{"epochz", "2"}};
  EXPECT_THROW(train_runs(t), CliError);
  t.config = {{"layers", "XX,RX"}};
  EXPECT_THROW(train_runs(t), CliError);
  t.config = {{"features", "pca"}};
  EXPECT_THROW(train_runs(t), CliError);
  t.config = {{"runs", "0"}};
  EXPECT_THROW(train_runs(t), CliError);
}

TEST(Resources, RowsAndCompression) {
  const auto off = resource_rows({{2, 4, 8}, 8, false, 0});
  const auto on = resource_rows({{2, 4, 8}, 8, true, 0});
  ASSERT_EQ(off.size(), 3u);
  EXPECT_EQ(off[2].report.qubits, 14);
  for (int i = 0; i < 3; ++i) {
    EXPECT_LE(on[i].report.size_raw, off[i].report.size_raw);
    if (i > 0) EXPECT_GT(off[i].report.size_std, off[i - 1].report.size_std);
  }
  const std::string csv = resource_csv(off);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), encoders::resource_csv_header());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_THROW(resource_rows({{3}, 8, false, 0}), CliError);
}

TEST(DumpCircuit, Examples) {
  DumpOptions o;
  o.what = "threshold";
  o.pixels.assign(16, 0);
  EXPECT_EQ(qsim::circuit_to_text(dump_circuit(o)), "qubits 16 params 0\n");

  o.what = "neqr";
  o.pixels = {0, 255, 128, 64};
  const auto neqr = dump_circuit(o);
  const std::string text = qsim::circuit_to_text(neqr);
  std::istringstream lines(text);
  std::string line;
  int h_lines = 0;
  while (std::getline(lines, line)) h_lines += line.rfind("H ", 0) == 0;
  EXPECT_EQ(h_lines, 2);
  EXPECT_EQ(qsim::circuit_from_text(text), neqr);

  o.what = "qnn-model";
  o.data_qubits = 3;
  o.layers = "XX,ZZ,YY";
  const auto model = dump_circuit(o);
  EXPECT_EQ(model.num_params(), 9);
  EXPECT_EQ(qsim::circuit_from_text(qsim::circuit_to_text(model)), model);

  o.what = "neqr";
  o.pixels = {1, 2, 3};
  EXPECT_THROW(dump_circuit(o), CliError);
  o.what = "fourier";
  EXPECT_THROW(dump_circuit(o), CliError);
}

TEST(Binary, RunsSubcommands) {
  TempDir dir("bin");
  const fs::path out = dir.path() / "c.txt";
  const std::string tool = QIMG_TOOL_PATH;
  ASSERT_EQ(std::system((tool + " dump-circuit --what neqr --pixels 0,255,128,64 --out " + out.string()).c_str()), 0);
  EXPECT_EQ(slurp(out).substr(0, 18), "qubits 10 params 0");
  EXPECT_NE(std::system((tool + " train --model cnn --data " + dir.path().string() + " 2>/dev/null").c_str()), 0);
  EXPECT_NE(std::system((tool + " prepare-data --subsample-train 0 --out " + dir.path().string() + " 2>/dev/null").c_str()), 0);
}
