// Copyright 2026 The qgauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgauge/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qgauge::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Structural, what); }

int dim_field(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) fail("channel JSON needs an integer \"dim\"");
  const int d = j["dim"].get<int>();
  if (d < 1 || d > 64) fail("\"dim\" out of range");
  return d;
}

RMatrix real_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) fail("expected a real number");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

}  // namespace

std::string_view to_string(ChannelFormat f) {
  switch (f) {
    case ChannelFormat::Kraus: return "kraus";
    case ChannelFormat::Superoperator: return "superoperator";
    case ChannelFormat::Transfer: return "transfer";
  }
  return "superoperator";
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail("complex numbers are encoded as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  if (cols == 0) fail("matrix rows must be non-empty lists");
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

ChannelData channel_from_json(const json& j) {
  if (!j.is_object()) fail("channel JSON must be an object");
  const int d = dim_field(j);
  if (!j.contains("format") || !j["format"].is_string()) fail("channel JSON needs a \"format\"");
  if (!j.contains("data")) fail("channel JSON needs \"data\"");
  const std::string fmt = j["format"].get<std::string>();
  const json& data = j["data"];

  ChannelData out;
  out.dim = d;
  if (fmt == "kraus") {
    out.format = ChannelFormat::Kraus;
    if (!data.is_array() || data.empty()) fail("kraus data must be a list of matrices");
    std::vector<CMatrix> ops;
    for (const auto& m : data) {
      ops.push_back(matrix_from_json(m));
      if (ops.back().rows() != d || ops.back().cols() != d) fail("Kraus operator is not dim x dim");
    }
    out.kraus.emplace(std::move(ops));
    out.superoperator = kraus_to_superoperator(*out.kraus);
    out.transfer = superoperator_to_transfer(out.superoperator);
  } else if (fmt == "superoperator") {
    out.format = ChannelFormat::Superoperator;
    out.superoperator = Superoperator(d, matrix_from_json(data));
    out.transfer = superoperator_to_transfer(out.superoperator);
  } else if (fmt == "transfer") {
    out.format = ChannelFormat::Transfer;
    if (!data.is_object() || !data.contains("k") || !data.contains("T")) {
      fail("transfer data must be {\"k\": [...], \"T\": [[...]]}");
    }
    const auto& kj = data["k"];
    if (!kj.is_array()) fail("\"k\" must be a list");
    RVector k(static_cast<Eigen::Index>(kj.size()));
    for (std::size_t i = 0; i < kj.size(); ++i) {
      if (!kj[i].is_number()) fail("\"k\" entries must be numbers");
      k(static_cast<Eigen::Index>(i)) = kj[i].get<double>();
    }
    out.transfer.emplace(d, std::move(k), real_matrix_from_json(data["T"]));
    out.superoperator = transfer_to_superoperator(*out.transfer);
  } else {
    fail("unknown channel format \"" + fmt + "\"");
  }
  return out;
}

json channel_to_json(const KrausSet& ks) {
  json ops = json::array();
  for (const auto& k : ks.operators()) ops.push_back(matrix_to_json(k));
  return json{{"dim", ks.dim()}, {"format", "kraus"}, {"data", std::move(ops)}};
}

json channel_to_json(const Superoperator& phi) {
  return json{{"dim", phi.dim()}, {"format", "superoperator"}, {"data", matrix_to_json(phi.matrix())}};
}

json channel_to_json(const TransferMatrix& tm) {
  json k = json::array();
  for (Eigen::Index i = 0; i < tm.translation().size(); ++i) k.push_back(tm.translation()(i));
  json t = json::array();
  for (Eigen::Index r = 0; r < tm.bloch_map().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < tm.bloch_map().cols(); ++c) row.push_back(tm.bloch_map()(r, c));
    t.push_back(std::move(row));
  }
  return json{{"dim", tm.dim()},
              {"format", "transfer"},
              {"basis", tm.basis()},
              {"data", json{{"k", std::move(k)}, {"T", std::move(t)}}}};
}

json spectrum_to_json(const Spectrum& sp) {
  json values = json::array();
  for (const auto& v : sp.values()) values.push_back(complex_to_json(v));
  return json{{"values", std::move(values)},
              {"unit_index", sp.unit_index()},
              {"gap", sp.gap()},
              {"unit_flagged", sp.unit_flagged()},
              {"conjugation_closed", sp.conjugation_closed()},
              {"gauge_invariant", true}};
}

Spectrum spectrum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("spectrum") || !j["spectrum"].is_array()) {
    fail("spectrum JSON must be {\"spectrum\": [...]}");
  }
  std::vector<cplx> values;
  for (const auto& v : j["spectrum"]) values.push_back(complex_from_json(v));
  int d = 0;
  if (j.contains("dim")) {
    d = dim_field(j);
  } else {
    d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(values.size()))));
  }
  if (static_cast<std::size_t>(d) * d != values.size()) fail("spectrum length must be dim^2");
  return Spectrum::from_values(d, std::move(values));
}

json verdict_to_json(const CriterionVerdict& v) {
  json out{{"criterion", v.criterion},
           {"satisfied", v.satisfied},
           {"margin", v.margin},
           {"branch", std::string(to_string(v.branch))}};
  if (v.witness) {
    out["witness"] = json{{"s", {v.witness->s.s1(), v.witness->s.s2(), v.witness->s.s3()}},
                          {"k", {v.witness->k[0], v.witness->k[1], v.witness->k[2]}}};
  }
  return out;
}

json metrics_to_json(const MetricsReport& m) {
  const auto field = [](double v, bool invariant) {
    return json{{"value", v}, {"gauge_invariant", invariant}};
  };
  json out{{"f_avg", field(m.f_avg, true)},
           {"error_rate", field(m.error_rate, true)},
           {"u_lower_r", field(m.u_lower_r, true)},
           {"u_lower_spectrum", field(m.u_lower_spectrum, true)},
           {"diamond_lower_r", field(m.diamond_lower_r, true)},
           {"diamond_upper_r", field(m.diamond_upper_r, true)},
           {"diamond_lower_wallman", field(m.diamond_lower_wallman, true)}};
  if (m.unitarity) out["unitarity"] = field(*m.unitarity, false);
  if (m.diamond_lower_wallman_exact_u) {
    out["diamond_lower_wallman_exact_u"] = field(*m.diamond_lower_wallman_exact_u, false);
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace qgauge::io
