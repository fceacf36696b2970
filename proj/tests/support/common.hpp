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

#include <optional>
#include <string>
#include <utility>

#include "ontosem/error.hpp"
#include "ontosem/seed.hpp"

namespace ontosem::testing {

inline const Knowledge& seed() {
  static const Knowledge k = loadSeed();
  return k;
}

// Runs `fn` and returns the error code it threw, if any.
template <class Fn>
std::optional<ErrorCode> thrownCode(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Name of the error code thrown by `fn`, or "no error".
template <class Fn>
std::string thrownName(Fn&& fn) {
  const auto code = thrownCode(std::forward<Fn>(fn));
  return code ? std::string(toString(*code)) : "no error";
}

}  // namespace ontosem::testing

#define CHECK_ERROR(expr, errc)                                          \
  CHECK(::ontosem::testing::thrownName([&] { (void)(expr); }) ==        \
        std::string(::ontosem::toString(errc)))
