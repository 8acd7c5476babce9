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

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "slmlab/qchannel.hpp"
#include "slmlab/qpolar.hpp"
#include "slmlab/qpt.hpp"
#include "slmlab/slm_model.hpp"

namespace slmlab::io {

using json = nlohmann::json;

// File formats shared by every command: density matrices and Kraus sets as
// {"re": [[..]], "im": [[..]]} JSON, count tables as CSV with a JSON mirror,
// masks as binary 8-bit PGM with a JSON sidecar, wavefunctions as flat
// row-major JSON arrays.

json density_to_json(const qpolar::DensityMatrix& rho);
qpolar::DensityMatrix density_from_json(const json& j);

json kraus_to_json(const qchannel::KrausSet& k);
qchannel::KrausSet kraus_from_json(const json& j);

json choi_to_json(const qchannel::ChoiState& c);
qchannel::ChoiState choi_from_json(const json& j);

json fit_to_json(const qchannel::PhaseFlipFit& fit);
qchannel::PhaseFlipFit fit_from_json(const json& j);

/// CSV with header `prep,proj,counts` and one row per (preparation,
/// projection) pair, 16 rows in basis order H, V, D, R.
std::string tomography_to_csv(const qpt::TomographySet& t);
qpt::TomographySet tomography_from_csv(const std::string& text,
                                       std::int64_t nominal_per_setting,
                                       std::uint64_t seed);

json tomography_to_json(const qpt::TomographySet& t);
qpt::TomographySet tomography_from_json(const json& j);

json error_report_to_json(const qpt::ErrorReport& report);
qpt::ErrorReport error_report_from_json(const json& j);

/// Binary PGM (P5, maxval 255) directly displayable on the device.
void write_mask_pgm(const slm::Mask& m, const std::filesystem::path& path);
slm::Mask read_mask_pgm(const std::filesystem::path& path);

json wavefunction_to_json(const slm::Wavefunction& psi);
slm::Wavefunction wavefunction_from_json(const json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// Doubles formatted with enough digits for an exact round trip.
std::string format_double(double value);

}  // namespace slmlab::io
