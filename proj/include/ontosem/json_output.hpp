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

#include <json.hpp>

#include "ontosem/logic_form.hpp"
#include "ontosem/trace.hpp"
#include "ontosem/unification.hpp"

namespace ontosem {

// Kind-tagged nodes mirroring the formula AST.
nlohmann::json toJson(const Term& t);
nlohmann::json toJson(const Formula& f);
nlohmann::json toJson(const Trace& trace);
nlohmann::json toJson(const UnifyOutcome& outcome);

}  // namespace ontosem
