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

#include "fiveq/reference_data.h"

#include <stdexcept>

namespace fiveq::reference {

const std::array<std::string_view, 16>& decoder_terms(char logical) {
    static constexpr std::array<std::string_view, 16> kX{
        "XXXXX", "IYYIX", "XIYYI", "IXIYY", "YIXIY", "IZXZI", "XYZZY", "ZZYXY",
        "IIZXZ", "YXYZZ", "ZIIZX", "XZIIZ", "ZYXYZ", "YZZYX", "ZXZII", "YYIXI"};
    static constexpr std::array<std::string_view, 16> kY{
        "YYYYY", "ZXXZY", "YZXXZ", "ZYZXX", "XZYZX", "ZIYIZ", "YXIIX", "IIXYX",
        "ZZIYI", "XYXII", "IZZIY", "YIZZI", "IXYXI", "XIIXY", "IYIZZ", "XXZYZ"};
    static constexpr std::array<std::string_view, 16> kZ{
        "ZZZZZ", "YIIYZ", "ZYIIY", "YZYII", "IYZYI", "YXZXY", "ZIXXI", "XXIZI",
        "YYXZX", "IZIXX", "XYYXZ", "ZXYYX", "XIZIX", "IXXIZ", "XZXYY", "IIYZY"};
    switch (logical) {
        case 'X':
            return kX;
        case 'Y':
            return kY;
        case 'Z':
            return kZ;
        default:
            throw std::invalid_argument("decoder term lists exist for X, Y, Z only");
    }
}

}  // namespace fiveq::reference
