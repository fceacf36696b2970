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

#include <compare>
#include <string>
#include <string_view>

namespace ontosem {

// Participant count constraint on a relation argument. One < Many.
enum class Multiplicity { One = 1, Many = 2 };

inline int rank(Multiplicity m) { return static_cast<int>(m); }

enum class ExistenceMark { Plain, MustExist, NeedNotExist };

// A type reference as it appears on a variable or an argument position:
// the ontological base plus existence and multiplicity annotations.
//
// Text form: Base, optionally followed by [1] or [1+], optionally followed
// by !E (must exist) or ?E (need not exist). Examples: Human, Car[1],
// Human[1+], Thing!E, Human[1+]?E.
struct AnnotatedType {
  std::string base;
  ExistenceMark existence = ExistenceMark::Plain;
  Multiplicity multiplicity = Multiplicity::One;

  AnnotatedType() = default;
  explicit AnnotatedType(std::string b,
                         ExistenceMark e = ExistenceMark::Plain,
                         Multiplicity m = Multiplicity::One)
      : base(std::move(b)), existence(e), multiplicity(m) {}

  friend bool operator==(const AnnotatedType&, const AnnotatedType&) = default;
};

// Merges existence marks under unification: a concrete-existence demand wins
// over a mere possibility, which wins over no demand.
ExistenceMark mergeExistence(ExistenceMark a, ExistenceMark b);

Multiplicity mergeMultiplicity(Multiplicity a, Multiplicity b);

// Canonical text. Multiplicity One is left implicit.
std::string format(const AnnotatedType& t);
std::string_view format(ExistenceMark m);
std::string_view format(Multiplicity m);

// Throws Error(Syntax) on malformed text. The base must be an identifier
// starting with an uppercase letter.
AnnotatedType parseAnnotatedType(std::string_view text);

// Parses "1" or "1+".
Multiplicity parseMultiplicity(std::string_view text);

}  // namespace ontosem
