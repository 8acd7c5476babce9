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

#include "slmlab/channel_spec.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "slmlab/angle.hpp"
#include "slmlab/io.hpp"
#include "slmlab/slm_model.hpp"

namespace slmlab::cli {

namespace {

double parse_real(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::logic_error&) {
    throw ParameterError(std::string("cannot parse ") + what + " from '" +
                         text + "'");
  }
  if (used != text.size()) {
    throw ParameterError(std::string("trailing characters parsing ") + what +
                         " from '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

/// Splits "key=value"; throws on anything else.
std::pair<std::string, std::string> key_value(const std::string& field) {
  const std::size_t eq = field.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ParameterError("expected key=value in channel spec, got '" + field +
                         "'");
  }
  return {field.substr(0, eq), field.substr(eq + 1)};
}

}  // namespace

double parse_angle(const std::string& text) {
  const std::size_t pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) {
    return parse_real(text, "angle");
  }
  const std::string prefix = text.substr(0, pi_pos);
  const std::string suffix = text.substr(pi_pos + 2);

  double factor = 1.0;
  if (prefix == "-") {
    factor = -1.0;
  } else if (!prefix.empty()) {
    factor = parse_real(prefix, "angle numerator");
  }

  double denom = 1.0;
  if (!suffix.empty()) {
    if (suffix[0] != '/' || suffix.size() < 2) {
      throw ParameterError("cannot parse angle '" + text + "'");
    }
    denom = parse_real(suffix.substr(1), "angle denominator");
    if (denom == 0.0) {
      throw ParameterError("zero denominator in angle '" + text + "'");
    }
  }
  return factor * std::numbers::pi / denom;
}

ChannelSpec parse_channel_spec(const std::string& text) {
  if (text == "identity") {
    ChannelSpec spec;
    spec.kind = ChannelSpec::Kind::Uniform;
    return spec;
  }
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParameterError("channel spec '" + text +
                         "' is not identity|uniform:...|pflip:...|mask:...");
  }
  const std::string kind = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);

  ChannelSpec spec;
  if (kind == "uniform") {
    spec.kind = ChannelSpec::Kind::Uniform;
    bool have_a = false;
    bool have_p = false;
    for (const std::string& field : split(body, ',')) {
      const auto [key, value] = key_value(field);
      if (key == "a") {
        spec.a = parse_angle(value);
        have_a = true;
      } else if (key == "p") {
        spec.p = parse_real(value, "p");
        have_p = true;
      } else {
        throw ParameterError("unknown uniform channel field '" + key + "'");
      }
    }
    if (!have_a || !have_p) {
      throw ParameterError("uniform channel spec requires a=<angle>,p=<real>");
    }
  } else if (kind == "pflip") {
    spec.kind = ChannelSpec::Kind::PhaseFlip;
    const auto [key, value] = key_value(body);
    if (key != "q") {
      throw ParameterError("pflip channel spec requires q=<real>");
    }
    spec.q = parse_real(value, "q");
  } else if (kind == "mask") {
    spec.kind = ChannelSpec::Kind::Mask;
    const std::vector<std::string> fields = split(body, ',');
    if (fields.empty() || fields[0].empty()) {
      throw ParameterError("mask channel spec requires a mask path");
    }
    spec.mask_path = fields[0];
    spec.p = 0.0;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto [key, value] = key_value(fields[i]);
      if (key == "psi") {
        spec.psi = value;
      } else if (key == "p") {
        spec.p = parse_real(value, "p");
      } else {
        throw ParameterError("unknown mask channel field '" + key + "'");
      }
    }
  } else {
    throw ParameterError("unknown channel kind '" + kind + "'");
  }
  return spec;
}

BuiltChannel build_channel(const ChannelSpec& spec) {
  BuiltChannel built;
  switch (spec.kind) {
    case ChannelSpec::Kind::Uniform: {
      built.kraus = qchannel::slm_uniform_channel(spec.a, spec.p);
      built.model_a = reduce_angle(spec.a);
      built.model_p = spec.p;
      break;
    }
    case ChannelSpec::Kind::PhaseFlip: {
      built.kraus = qchannel::phase_flip_channel(spec.q);
      built.model_a = 0.0;
      built.model_p = spec.q;
      break;
    }
    case ChannelSpec::Kind::Mask: {
      const slm::Mask mask = io::read_mask_pgm(spec.mask_path);
      std::optional<int> cell_px;
      slm::Wavefunction psi = [&] {
        if (spec.psi == "uniform") {
          return slm::Wavefunction::uniform(mask.width, mask.height);
        }
        if (spec.psi.rfind("cells:", 0) == 0) {
          cell_px =
              static_cast<int>(parse_real(spec.psi.substr(6), "cell size"));
          return slm::Wavefunction::uniform_over_cells(mask.width, mask.height,
                                                       *cell_px);
        }
        return io::wavefunction_from_json(io::read_json_file(spec.psi));
      }();
      const slm::SpatialAverage avg = slm::spatial_phase_average(mask, psi);
      built.kraus = slm::effective_channel(mask, psi, spec.p);
      built.model_a = reduce_angle(avg.phase());
      const double a_mag = std::min(avg.magnitude(), 1.0);
      built.model_p = 0.5 * (1.0 - (1.0 - 2.0 * spec.p) * a_mag);
      if (cell_px) {
        try {
          built.realized_fraction = slm::realized_pi_fraction(mask, *cell_px);
        } catch (const ParameterError&) {
          // not a phase-flip mask; no fraction to report
        }
      }
      break;
    }
  }
  return built;
}

}  // namespace slmlab::cli
