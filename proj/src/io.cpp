// Copyright 2026 The slmlab Authors
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

#include "slmlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace slmlab::io {

namespace {

using complexd = std::complex<double>;

json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
  if (!j.contains("re") || !j.contains("im")) {
    throw IoError("complex matrix JSON requires 're' and 'im' fields");
  }
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const auto rows = re.size();
  if (rows == 0 || im.size() != rows) {
    throw IoError("complex matrix JSON has inconsistent dimensions");
  }
  const auto cols = re.at(0).size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (re.at(r).size() != cols || im.at(r).size() != cols) {
      throw IoError("complex matrix JSON has ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complexd(re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>());
    }
  }
  return m;
}

/// Reads one PGM header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  return token;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

json density_to_json(const qpolar::DensityMatrix& rho) {
  return complex_matrix_to_json(rho.matrix());
}

qpolar::DensityMatrix density_from_json(const json& j) {
  return qpolar::DensityMatrix::from_matrix(complex_matrix_from_json(j));
}

json kraus_to_json(const qchannel::KrausSet& k) {
  json ops = json::array();
  for (const auto& m : k.operators) {
    ops.push_back(complex_matrix_to_json(m));
  }
  return json{{"operators", std::move(ops)}};
}

qchannel::KrausSet kraus_from_json(const json& j) {
  if (!j.contains("operators")) {
    throw IoError("Kraus JSON requires an 'operators' field");
  }
  qchannel::KrausSet k;
  for (const auto& op : j.at("operators")) {
    const Eigen::MatrixXcd m = complex_matrix_from_json(op);
    if (m.rows() != 2 || m.cols() != 2) {
      throw IoError("Kraus operators must be 2x2");
    }
    k.operators.push_back(m);
  }
  return k;
}

json choi_to_json(const qchannel::ChoiState& c) {
  return density_to_json(c.state());
}

qchannel::ChoiState choi_from_json(const json& j) {
  return qchannel::ChoiState::from_state(density_from_json(j));
}

json fit_to_json(const qchannel::PhaseFlipFit& fit) {
  return json{{"p", fit.p}, {"a", fit.a}, {"fidelity", fit.fidelity}};
}

qchannel::PhaseFlipFit fit_from_json(const json& j) {
  qchannel::PhaseFlipFit fit;
  fit.p = j.at("p").get<double>();
  fit.a = j.at("a").get<double>();
  fit.fidelity = j.at("fidelity").get<double>();
  return fit;
}

std::string tomography_to_csv(const qpt::TomographySet& t) {
  std::ostringstream out;
  out << "prep,proj,counts\n";
  for (qpt::BasisLabel prep : qpt::kBases) {
    for (qpt::BasisLabel proj : qpt::kBases) {
      out << qpt::to_char(prep) << ',' << qpt::to_char(proj) << ','
          << t.at(prep, proj) << '\n';
    }
  }
  return out.str();
}

qpt::TomographySet tomography_from_csv(const std::string& text,
                                       std::int64_t nominal_per_setting,
                                       std::uint64_t seed) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("prep,proj,counts", 0) != 0) {
    throw IoError("tomography CSV must start with 'prep,proj,counts'");
  }
  qpt::TomographySet t;
  t.nominal_per_setting = nominal_per_setting;
  t.seed = seed;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string prep, proj, counts;
    if (!std::getline(fields, prep, ',') || !std::getline(fields, proj, ',') ||
        !std::getline(fields, counts)) {
      throw IoError("malformed tomography CSV row: " + line);
    }
    if (prep.size() != 1 || proj.size() != 1) {
      throw IoError("malformed basis label in tomography CSV row: " + line);
    }
    t.at(qpt::basis_from_char(prep[0]), qpt::basis_from_char(proj[0])) =
        std::stoll(counts);
    ++rows;
  }
  if (rows != 16) {
    throw IoError("tomography CSV must hold 16 rows, found " +
                  std::to_string(rows));
  }
  return t;
}

json tomography_to_json(const qpt::TomographySet& t) {
  json counts = json::object();
  for (qpt::BasisLabel prep : qpt::kBases) {
    json row = json::object();
    for (qpt::BasisLabel proj : qpt::kBases) {
      row[std::string(1, qpt::to_char(proj))] = t.at(prep, proj);
    }
    counts[std::string(1, qpt::to_char(prep))] = std::move(row);
  }
  return json{{"counts", std::move(counts)},
              {"nominal_per_setting", t.nominal_per_setting},
              {"seed", t.seed}};
}

qpt::TomographySet tomography_from_json(const json& j) {
  qpt::TomographySet t;
  t.nominal_per_setting = j.at("nominal_per_setting").get<std::int64_t>();
  t.seed = j.at("seed").get<std::uint64_t>();
  const auto& counts = j.at("counts");
  for (qpt::BasisLabel prep : qpt::kBases) {
    const auto& row = counts.at(std::string(1, qpt::to_char(prep)));
    for (qpt::BasisLabel proj : qpt::kBases) {
      t.at(prep, proj) =
          row.at(std::string(1, qpt::to_char(proj))).get<std::int64_t>();
    }
  }
  return t;
}

json error_report_to_json(const qpt::ErrorReport& report) {
  json j = json::object();
  for (const auto& [name, stat] : report.scalars) {
    j[name] = json{{"mean", stat.mean}, {"std", stat.std_dev}};
  }
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  return j;
}

qpt::ErrorReport error_report_from_json(const json& j) {
  qpt::ErrorReport report;
  report.trials = j.at("trials").get<int>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [key, value] : j.items()) {
    if (key == "trials" || key == "seed") continue;
    qpt::ScalarStat stat;
    stat.mean = value.at("mean").get<double>();
    stat.std_dev = value.at("std").get<double>();
    report.scalars[key] = stat;
  }
  return report;
}

void write_mask_pgm(const slm::Mask& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << "P5\n" << m.width << ' ' << m.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(m.gray.data()),
            static_cast<std::streamsize>(m.gray.size()));
  if (!out) {
    throw IoError("failed writing PGM data to '" + path.string() + "'");
  }
}

slm::Mask read_mask_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  if (next_pgm_token(in) != "P5") {
    throw IoError("'" + path.string() + "' is not a binary PGM (P5) file");
  }
  slm::Mask m;
  try {
    m.width = std::stoi(next_pgm_token(in));
    m.height = std::stoi(next_pgm_token(in));
    const int maxval = std::stoi(next_pgm_token(in));
    if (maxval != 255) {
      throw IoError("PGM maxval must be 255");
    }
  } catch (const std::logic_error&) {
    throw IoError("malformed PGM header in '" + path.string() + "'");
  }
  if (m.width < 1 || m.height < 1) {
    throw IoError("malformed PGM dimensions in '" + path.string() + "'");
  }
  m.gray.resize(static_cast<std::size_t>(m.width) *
                static_cast<std::size_t>(m.height));
  in.read(reinterpret_cast<char*>(m.gray.data()),
          static_cast<std::streamsize>(m.gray.size()));
  if (in.gcount() != static_cast<std::streamsize>(m.gray.size())) {
    throw IoError("PGM pixel data truncated in '" + path.string() + "'");
  }
  return m;
}

json wavefunction_to_json(const slm::Wavefunction& psi) {
  json re = json::array();
  json im = json::array();
  for (const auto& a : psi.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return json{{"re", std::move(re)},
              {"im", std::move(im)},
              {"width", psi.width()},
              {"height", psi.height()}};
}

slm::Wavefunction wavefunction_from_json(const json& j) {
  const int width = j.at("width").get<int>();
  const int height = j.at("height").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != im.size()) {
    throw IoError("wavefunction JSON has mismatched re/im lengths");
  }
  std::vector<complexd> amp;
  amp.reserve(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    amp.emplace_back(re.at(i).get<double>(), im.at(i).get<double>());
  }
  return slm::Wavefunction::from_amplitudes(width, height, std::move(amp));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw IoError("'" + path.string() + "' is not valid JSON");
  }
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace slmlab::io
