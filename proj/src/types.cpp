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

#include "ontosem/types.hpp"

#include <cctype>

#include "ontosem/error.hpp"

namespace ontosem {

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateType: return "DuplicateType";
    case ErrorCode::UnknownParent: return "UnknownParent";
    case ErrorCode::CycleWouldForm: return "CycleWouldForm";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::UnknownSignature: return "UnknownSignature";
    case ErrorCode::OntologyFrozen: return "OntologyFrozen";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::InvalidLexicon: return "InvalidLexicon";
    case ErrorCode::UnknownWord: return "UnknownWord";
    case ErrorCode::UngrammaticalInput: return "UngrammaticalInput";
    case ErrorCode::UnknownAdjective: return "UnknownAdjective";
    case ErrorCode::MissingAnchor: return "MissingAnchor";
    case ErrorCode::InterpretationFailure: return "InterpretationFailure";
  }
  return "Unknown";
}

ExistenceMark mergeExistence(ExistenceMark a, ExistenceMark b) {
  if (a == ExistenceMark::MustExist || b == ExistenceMark::MustExist) {
    return ExistenceMark::MustExist;
  }
  if (a == ExistenceMark::NeedNotExist || b == ExistenceMark::NeedNotExist) {
    return ExistenceMark::NeedNotExist;
  }
  return ExistenceMark::Plain;
}

Multiplicity mergeMultiplicity(Multiplicity a, Multiplicity b) {
  return rank(a) >= rank(b) ? a : b;
}

std::string_view format(ExistenceMark m) {
  switch (m) {
    case ExistenceMark::Plain: return "";
    case ExistenceMark::MustExist: return "!E";
    case ExistenceMark::NeedNotExist: return "?E";
  }
  return "";
}

std::string_view format(Multiplicity m) {
  return m == Multiplicity::One ? "1" : "1+";
}

std::string format(const AnnotatedType& t) {
  std::string out = t.base;
  if (t.multiplicity == Multiplicity::Many) out += "[1+]";
  out += format(t.existence);
  return out;
}

Multiplicity parseMultiplicity(std::string_view text) {
  if (text == "1") return Multiplicity::One;
  if (text == "1+") return Multiplicity::Many;
  throw Error(ErrorCode::Syntax,
              "bad multiplicity '" + std::string(text) + "'; expected 1 or 1+");
}

AnnotatedType parseAnnotatedType(std::string_view text) {
  auto fail = [&](const char* why) -> Error {
    return Error(ErrorCode::Syntax,
                 "bad type '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  if (text.empty() || !std::isupper(static_cast<unsigned char>(text[0]))) {
    throw fail("base must start with an uppercase letter");
  }
  while (i < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
    ++i;
  }
  AnnotatedType out{std::string(text.substr(0, i))};
  if (i < text.size() && text[i] == '[') {
    auto close = text.find(']', i);
    if (close == std::string_view::npos) throw fail("unterminated [");
    out.multiplicity = parseMultiplicity(text.substr(i + 1, close - i - 1));
    i = close + 1;
  }
  std::string_view rest = text.substr(i);
  if (rest == "!E") {
    out.existence = ExistenceMark::MustExist;
  } else if (rest == "?E") {
    out.existence = ExistenceMark::NeedNotExist;
  } else if (!rest.empty()) {
    throw fail("trailing characters");
  }
  return out;
}

}  // namespace ontosem
