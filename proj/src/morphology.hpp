// Copyright 2026 The Ontosem Authors.
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

#include <array>
#include <string_view>
#include <utility>

namespace ontosem {

// Past forms that the regular rules cannot recover, as {past, base}.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 11>
    kIrregularPast{{{"read", "read"},
                    {"bought", "buy"},
                    {"sought", "seek"},
                    {"found", "find"},
                    {"ate", "eat"},
                    {"drove", "drive"},
                    {"rode", "ride"},
                    {"made", "make"},
                    {"sold", "sell"},
                    {"wrote", "write"},
                    {"burnt", "burn"}}};

// Variant past forms that are recognised but never generated.
inline bool isVariantPast(std::string_view form) { return form == "burnt"; }

}  // namespace ontosem
