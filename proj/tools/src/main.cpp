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

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "qimg/cli/commands.hpp"
#include "qimg/qsim/circuit_io.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qimg::cli;

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw CliError("cannot write " + out);
  f << text;
}

std::pair<int, int> parse_size(const std::string& text) {
  int w = 0, h = 0;
  char x = 0;
  if (std::sscanf(text.c_str(), "%d%c%d", &w, &x, &h) != 3 || (x != 'x' && x != 'X') || w < 1 || h < 1) {
    throw CliError("size must look like WxH, got '" + text + "'");
  }
  return {w, h};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum image classification workbench"};
  app.require_subcommand(1);

  // prepare-data
  auto* prep = app.add_subcommand("prepare-data", "Filter, subsample, and downscale Fashion-MNIST classes 0/3");
  const fs::path data_dir = default_data_dir();
  PrepareOptions popt = PrepareOptions::with_data_dir(data_dir);
  std::string psize = "4x4";
  std::string ptrain_images = popt.train_images.string(), ptrain_labels = popt.train_labels.string();
  std::string ptest_images = popt.test_images.string(), ptest_labels = popt.test_labels.string();
  std::string pout = popt.out.string();
  prep->add_option("--train-images", ptrain_images, "IDX image file")->capture_default_str();
  prep->add_option("--train-labels", ptrain_labels, "IDX label file")->capture_default_str();
  prep->add_option("--test-images", ptest_images, "IDX image file")->capture_default_str();
  prep->add_option("--test-labels", ptest_labels, "IDX label file")->capture_default_str();
  prep->add_option("--size", psize, "Output image size WxH")->capture_default_str();
  prep->add_option("--pca", popt.pca_k, "Also write K PCA features per image (0 = off)")->capture_default_str();
  prep->add_option("--subsample-train", popt.subsample_train, "Training items kept")->capture_default_str();
  prep->add_option("--subsample-test", popt.subsample_test, "Test items kept")->capture_default_str();
  prep->add_option("--seed", popt.seed, "Subsample seed")->capture_default_str();
  prep->add_option("--out", pout, "Output directory")->capture_default_str();

  // train
  auto* train = app.add_subcommand("train", "Seeded training sweep over prepared data");
  std::string tmodel = "qnn", tconfig, tdata = "prepared", tout = "runs";
  int tepochs = 20, truns = 10, tjobs = 1;
  std::uint64_t tseed = 0;
  train->add_option("--model", tmodel, "qnn, qnn-neqr, or classical")->capture_default_str();
  auto* o_epochs = train->add_option("--epochs", tepochs, "Epochs per run")->capture_default_str();
  auto* o_runs = train->add_option("--runs", truns, "Independent runs")->capture_default_str();
  auto* o_seed = train->add_option("--seed", tseed, "Seed of the first run; run i uses seed + i")->capture_default_str();
  train->add_option("--config", tconfig, "key=value file; flags override it");
  train->add_option("--data", tdata, "Directory written by prepare-data")->capture_default_str();
  train->add_option("--out", tout, "Output directory")->capture_default_str();
  train->add_option("--jobs", tjobs, "Runs trained in parallel")->capture_default_str();

  // resources
  auto* res = app.add_subcommand("resources", "NEQR circuit resource table as CSV");
  std::vector<int> rsizes{2, 4, 8};
  int rq = 8;
  std::string rcompress = "off", rout;
  std::uint64_t rseed = 0;
  res->add_option("--sizes", rsizes, "Image sides")->delimiter(',')->capture_default_str();
  res->add_option("--q", rq, "Gray bit depth")->capture_default_str();
  res->add_option("--compress", rcompress, "on or off")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  res->add_option("--seed", rseed, "Seed for the random images")->capture_default_str();
  res->add_option("--out", rout, "CSV file (default stdout)");

  // dump-circuit
  auto* dump = app.add_subcommand("dump-circuit", "Write a circuit in the text format");
  DumpOptions dopt;
  std::string dpixels, dcompress = "off", dout;
  dump->add_option("--what", dopt.what, "neqr, threshold, or qnn-model")
      ->check(CLI::IsMember({"neqr", "threshold", "qnn-model"}))
      ->capture_default_str();
  dump->add_option("--pixels", dpixels, "Comma-separated row-major square image");
  dump->add_option("--q", dopt.q, "Gray bit depth")->capture_default_str();
  dump->add_option("--compress", dcompress, "on or off (neqr)")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  dump->add_option("--data-qubits", dopt.data_qubits, "qnn-model data width")->capture_default_str();
  dump->add_option("--layers", dopt.layers, "qnn-model layer gates")->capture_default_str();
  dump->add_option("--readout", dopt.readout, "qnn-model readout, Z or Y")->capture_default_str();
  dump->add_option("--out", dout, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prep->parsed()) {
      popt.train_images = ptrain_images;
      popt.train_labels = ptrain_labels;
      popt.test_images = ptest_images;
      popt.test_labels = ptest_labels;
      std::tie(popt.width, popt.height) = parse_size(psize);
      popt.out = pout;
      prepare_data(popt);
      std::cout << "wrote " << (popt.out / "manifest.json").string() << "\n";
    } else if (train->parsed()) {
      TrainOptions topt;
      topt.model = model_from_name(tmodel);
      topt.jobs = tjobs;
      topt.data = tdata;
      topt.out = tout;
      if (!tconfig.empty()) topt.config = read_config_file(tconfig);
      if (o_epochs->count() > 0 || !topt.config.contains("epochs")) topt.config["epochs"] = std::to_string(tepochs);
      if (o_runs->count() > 0 || !topt.config.contains("runs")) topt.config["runs"] = std::to_string(truns);
      if (o_seed->count() > 0 || !topt.config.contains("seed")) topt.config["seed"] = std::to_string(tseed);
      const auto summary = train_runs(topt);
      std::printf("%s: %zu runs, final_test_acc mean %.4f std %.4f\n", tmodel.c_str(), summary.reports.size(),
                  summary.mean, summary.std);
    } else if (res->parsed()) {
      ResourceOptions ropt;
      ropt.sizes = rsizes;
      ropt.q = rq;
      ropt.compress = rcompress == "on";
      ropt.seed = rseed;
      write_or_print(rout, resource_csv(resource_rows(ropt)));
    } else if (dump->parsed()) {
      if (!dpixels.empty()) {
        for (const auto& field : CLI::detail::split(dpixels, ',')) {
          const int v = std::stoi(field);
          if (v < 0 || v > 255) throw CliError("pixel out of range: " + field);
          dopt.pixels.push_back(static_cast<std::uint8_t>(v));
        }
      }
      dopt.compress = dcompress == "on";
      write_or_print(dout, qimg::qsim::circuit_to_text(dump_circuit(dopt)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
