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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontosem/logic_form.hpp"
#include "ontosem/ontology.hpp"

namespace ontosem {

struct ProperNoun {
  // Declared type of the bearer, Thing when not stated.
  std::string type{kRootType};
  friend bool operator==(const ProperNoun&, const ProperNoun&) = default;
};

struct TypeNoun {
  std::string type;
  friend bool operator==(const TypeNoun&, const TypeNoun&) = default;
};

struct DeverbalNoun {
  std::string activity;
  std::string role;
  friend bool operator==(const DeverbalNoun&, const DeverbalNoun&) = default;
};

struct Adjective {
  std::string pred;
  std::string appliesTo;
  friend bool operator==(const Adjective&, const Adjective&) = default;
};

struct Verb {
  std::string relation;
  friend bool operator==(const Verb&, const Verb&) = default;
};

enum class ComplementKind { PropertyNoun, StateNoun, ProcessNoun, ActivityNoun };

std::string_view format(ComplementKind kind);
// Property, State, Process or Activity.
std::string_view kindType(ComplementKind kind);

struct CopularComplement {
  ComplementKind kind = ComplementKind::PropertyNoun;
  std::string pred;
  // Type that ordinarily holds the property, when narrower than the
  // relation's own argument type.
  std::optional<std::string> holder;
  friend bool operator==(const CopularComplement&,
                         const CopularComplement&) = default;
};

using Recipe = std::variant<ProperNoun, TypeNoun, DeverbalNoun, Adjective,
                            Verb, CopularComplement>;

struct LexEntry {
  std::string surface;  // words joined by single spaces
  Recipe recipe;
  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

std::string describe(const LexEntry& entry);

struct VerbForm {
  std::string base;
  Tag tag = Tag::Does;
};

class Lexicon {
 public:
  // Validates every referenced type, predicate and relation.
  void add(LexEntry entry, const Ontology& onto);

  // First entry declared for the word.
  const LexEntry& lookup(std::string_view word) const;
  std::vector<const LexEntry*> entries(std::string_view word) const;

  template <class R>
  const R* find(std::string_view word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return nullptr;
    for (std::size_t i : it->second) {
      if (const R* r = std::get_if<R>(&entries_[i].recipe)) return r;
    }
    return nullptr;
  }

  // Longest word count of any multiword entry.
  std::size_t maxWords() const { return maxWords_; }

  // Inflected form to base plus tense tag; `afterCan` expects the bare base.
  std::optional<VerbForm> analyzeVerb(std::string_view word,
                                      bool afterCan = false) const;

  std::span<const LexEntry> all() const { return entries_; }

 private:
  std::vector<LexEntry> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
  std::size_t maxWords_ = 1;
};

Lexicon parseLexicon(std::string_view text, const Ontology& onto);
Lexicon loadLexiconFile(const std::filesystem::path& path,
                        const Ontology& onto);

}  // namespace ontosem
