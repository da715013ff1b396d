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

#include "qimg/encoders/resources.hpp"

#include <sstream>

#include "qimg/qsim/decompose.hpp"

namespace qimg::encoders {

ResourceReport resource_report(const qsim::Circuit& circuit) {
  ResourceReport r;
  r.qubits = circuit.num_qubits();
  r.size_raw = qsim::circuit_size(circuit);
  r.depth_raw = qsim::circuit_depth(circuit);
  for (const qsim::Gate& g : circuit.gates()) {
    if (g.kind == qsim::GateKind::MCX) ++r.mcx_count;
  }
  const qsim::Circuit standard = qsim::decompose(circuit, qsim::Basis::kStandard);
  r.size_std = qsim::circuit_size(standard);
  r.depth_std = qsim::circuit_depth(standard);
  return r;
}

std::string resource_csv_header() {
  return "image_side,q,qubits,size_raw,depth_raw,size_std,depth_std,mcx_count,compressed";
}

std::string to_csv_row(const ResourceRow& row) {
  std::ostringstream os;
  const ResourceReport& r = row.report;
  os << row.image_side << ',' << row.q << ',' << r.qubits << ',' << r.size_raw << ',' << r.depth_raw << ','
     << r.size_std << ',' << r.depth_std << ',' << r.mcx_count << ',' << (row.compressed ? "true" : "false");
  return os.str();
}

}  // namespace qimg::encoders
