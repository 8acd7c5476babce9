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

#include <optional>
#include <string>

#include "slmlab/qchannel.hpp"

namespace slmlab::cli {

// Channel specification grammar shared by the command-line tools:
//   identity
//   uniform:a=<angle>,p=<real>
//   pflip:q=<real>
//   mask:<path>,psi=<uniform|cells:<px>|path.json>,p=<real>
// Angles accept decimal radians or multiples of pi such as `3pi/4`.

/// Parses `0.5`, `pi`, `3pi/4`, `-pi/2`, `2pi`, ...
double parse_angle(const std::string& text);

struct ChannelSpec {
  enum class Kind { Uniform, PhaseFlip, Mask };

  Kind kind = Kind::Uniform;
  double a = 0.0;          // Uniform
  double p = 0.0;          // Uniform, Mask (device dephasing)
  double q = 0.0;          // PhaseFlip
  std::string mask_path;   // Mask
  std::string psi = "uniform";  // Mask: uniform | cells:<px> | file path
};

ChannelSpec parse_channel_spec(const std::string& text);

/// A spec realized as Kraus operators together with the family member
/// (model_a, model_p) its action corresponds to; the fit pins its phase to
/// model_a unless asked to fit it.
struct BuiltChannel {
  qchannel::KrausSet kraus;
  double model_a = 0.0;
  double model_p = 0.0;
  std::optional<double> realized_fraction;  // phase-flip masks only
};

/// Builds the channel, reading mask/wavefunction files when needed.
BuiltChannel build_channel(const ChannelSpec& spec);

}  // namespace slmlab::cli
