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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontosem/types.hpp"

namespace ontosem {

inline constexpr std::string_view kRootType = "Thing";

struct TypeNode {
  std::string name;
  std::optional<std::string> parent;  // empty only for Thing
};

// A property (arity 1) or relation (arity 2) declaration. Each argument
// carries its multiplicity and existence mark. declOrder is the position of
// the declaration among all signatures and doubles as its saliency rank.
struct Signature {
  std::string name;
  std::vector<AnnotatedType> args;
  std::size_t declOrder = 0;

  std::size_t arity() const { return args.size(); }
};

struct SalientActivity {
  std::string activity;  // unary predicate over Activity
  std::string role;      // binary relation Activity x host
};

struct SalientActivityEntry {
  std::string hostType;
  std::vector<SalientActivity> activities;  // most salient first
};

// One row of lraps*: a relation reachable for a (s, t) query.
struct RelationTriple {
  std::string relation;
  Multiplicity first;
  Multiplicity second;
  const Signature* signature = nullptr;

  friend bool operator==(const RelationTriple& a, const RelationTriple& b) {
    return a.relation == b.relation && a.first == b.first &&
           a.second == b.second && a.signature == b.signature;
  }
};

// Type tree plus property/relation tables. Mutable until freeze(); after
// that every query is const and the object may be shared between threads.
class Ontology {
 public:
  void addType(const std::string& name,
               const std::optional<std::string>& parent);
  void addProperty(const std::string& name, AnnotatedType arg);
  void addRelation(const std::string& name, AnnotatedType first,
                   AnnotatedType second);
  void addSalientActivities(const std::string& host,
                            std::vector<SalientActivity> activities);

  // Validates salient-activity tables and locks the ontology.
  void freeze();
  bool frozen() const { return frozen_; }

  bool contains(std::string_view type) const;
  std::span<const TypeNode> types() const { return types_; }
  std::optional<std::string> parentOf(std::string_view type) const;
  // type, parent, grandparent, ..., Thing.
  std::vector<std::string> ancestry(std::string_view type) const;
  std::size_t depth(std::string_view type) const;

  // True iff s lies below (or is) t.
  bool subsumes(std::string_view s, std::string_view t) const;

  std::vector<std::string> lpapStar(std::string_view type) const;
  std::vector<RelationTriple> lrapsStar(std::string_view s,
                                        std::string_view t) const;

  // Head of the multiplicity-filtered lraps*(s, t), forward direction only.
  std::optional<RelationTriple> mostSalient(std::string_view s, Multiplicity m,
                                            std::string_view t,
                                            Multiplicity n) const;

  // Most salient relation between s and t. Falls back to the reversed pair
  // when the forward table yields nothing.
  std::optional<std::string> msr(std::string_view s, Multiplicity m,
                                 std::string_view t, Multiplicity n) const;

  std::span<const Signature> signatures() const { return signatures_; }
  std::vector<const Signature*> signaturesNamed(std::string_view name) const;
  const Signature* property(std::string_view name) const;
  bool hasRelation(std::string_view name) const;

  // The salient-activity entry for the type or its nearest ancestor that
  // has one.
  const SalientActivityEntry* salientActivities(std::string_view type) const;

  // Types that own no predicate anywhere on their chain and are not an
  // ancestor of a type that does.
  std::vector<std::string> lint() const;

 private:
  const TypeNode& node(std::string_view type) const;
  void requireType(std::string_view type) const;
  void requireMutable() const;

  bool frozen_ = false;
  std::vector<TypeNode> types_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Signature> signatures_;
  // Declared properties per type, in declaration order.
  std::map<std::string, std::vector<std::size_t>, std::less<>> properties_;
  // Declared relations per (first, second) type pair, in declaration order.
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>>
      relations_;
  std::vector<SalientActivityEntry> activities_;
};

// Parses the line-oriented ontology format. Throws Error(Syntax) with the
// line number prefixed, or the Ontology error raised by a declaration.
// The result is frozen.
Ontology parseOntology(std::string_view text);
Ontology loadOntologyFile(const std::filesystem::path& path);

}  // namespace ontosem
