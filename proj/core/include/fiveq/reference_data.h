// Copyright 2026 The fiveq Authors
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

#ifndef FIVEQ_REFERENCE_DATA_H
#define FIVEQ_REFERENCE_DATA_H

#include <array>
#include <string_view>

namespace fiveq::reference {

/// Reference term lists of D_X, D_Y, D_Z for the five-qubit code with the
/// symmetric decoder. Every term carries coefficient -1/4.
const std::array<std::string_view, 16>& decoder_terms(char logical);

// Expected extremes of ||Df|| on circles of these radii around (1, 1).
inline constexpr std::array<double, 7> kBasinRadii{0.02, 0.04, 0.06, 0.07, 0.072, 0.073, 0.08};
inline constexpr std::array<double, 7> kBasinMaxNorm{0.245, 0.520, 0.812, 0.964, 0.995, 1.010, 1.118};
inline constexpr std::array<double, 7> kBasinMinNorm{0.101, 0.202, 0.283, 0.332, 0.346, 0.361, 0.387};
inline constexpr double kBasinTableTolerance = 0.005;

}  // namespace fiveq::reference

#endif
