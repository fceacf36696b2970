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

#include "ontosem/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ontosem/error.hpp"
#include "text_util.hpp"

namespace ontosem {

void Ontology::requireMutable() const {
  if (frozen_) {
    throw Error(ErrorCode::OntologyFrozen, "ontology is frozen");
  }
}

void Ontology::requireType(std::string_view type) const {
  if (!contains(type)) {
    throw Error(ErrorCode::UnknownType,
                "unknown type '" + std::string(type) + "'");
  }
}

const TypeNode& Ontology::node(std::string_view type) const {
  auto it = index_.find(type);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownType,
                "unknown type '" + std::string(type) + "'");
  }
  return types_[it->second];
}

void Ontology::addType(const std::string& name,
                       const std::optional<std::string>& parent) {
  requireMutable();
  if (contains(name)) {
    throw Error(ErrorCode::DuplicateType, "duplicate type '" + name + "'");
  }
  if (!parent) {
    if (name != kRootType) {
      throw Error(ErrorCode::UnknownParent,
                  "type '" + name + "' needs a parent; only Thing is a root");
    }
  } else {
    if (*parent == name || name == kRootType) {
      throw Error(ErrorCode::CycleWouldForm,
                  "type '" + name + "' cannot sit below '" + *parent + "'");
    }
    if (!contains(*parent)) {
      throw Error(ErrorCode::UnknownParent,
                  "unknown parent '" + *parent + "' for type '" + name + "'");
    }
  }
  index_.emplace(name, types_.size());
  types_.push_back(TypeNode{name, parent});
}

void Ontology::addProperty(const std::string& name, AnnotatedType arg) {
  requireMutable();
  requireType(arg.base);
  const std::size_t order = signatures_.size();
  properties_[arg.base].push_back(order);
  signatures_.push_back(Signature{name, {std::move(arg)}, order});
}

void Ontology::addRelation(const std::string& name, AnnotatedType first,
                           AnnotatedType second) {
  requireMutable();
  requireType(first.base);
  requireType(second.base);
  const std::size_t order = signatures_.size();
  relations_[{first.base, second.base}].push_back(order);
  signatures_.push_back(
      Signature{name, {std::move(first), std::move(second)}, order});
}

void Ontology::addSalientActivities(const std::string& host,
                                    std::vector<SalientActivity> activities) {
  requireMutable();
  requireType(host);
  activities_.push_back(SalientActivityEntry{host, std::move(activities)});
}

void Ontology::freeze() {
  if (frozen_) return;
  if (!contains(kRootType)) {
    throw Error(ErrorCode::UnknownType, "ontology has no root type Thing");
  }
  for (const auto& entry : activities_) {
    for (const auto& act : entry.activities) {
      const Signature* p = property(act.activity);
      if (p == nullptr || !subsumes(p->args[0].base, "Activity")) {
        throw Error(ErrorCode::UnknownSignature,
                    "salient activity '" + act.activity +
                        "' is not a declared property over Activity");
      }
      bool linked = false;
      for (const Signature* r : signaturesNamed(act.role)) {
        if (r->arity() == 2 && subsumes("Activity", r->args[0].base) &&
            subsumes(entry.hostType, r->args[1].base)) {
          linked = true;
        }
      }
      if (!linked) {
        throw Error(ErrorCode::UnknownSignature,
                    "role '" + act.role + "' does not link Activity to " +
                        entry.hostType);
      }
    }
  }
  frozen_ = true;
}

bool Ontology::contains(std::string_view type) const {
  return index_.find(type) != index_.end();
}

std::optional<std::string> Ontology::parentOf(std::string_view type) const {
  return node(type).parent;
}

std::vector<std::string> Ontology::ancestry(std::string_view type) const {
  std::vector<std::string> chain;
  const TypeNode* n = &node(type);
  chain.push_back(n->name);
  while (n->parent) {
    n = &node(*n->parent);
    chain.push_back(n->name);
  }
  return chain;
}

std::size_t Ontology::depth(std::string_view type) const {
  return ancestry(type).size() - 1;
}

bool Ontology::subsumes(std::string_view s, std::string_view t) const {
  requireType(t);
  const TypeNode* n = &node(s);
  while (true) {
    if (n->name == t) return true;
    if (!n->parent) return false;
    n = &node(*n->parent);
  }
}

std::vector<std::string> Ontology::lpapStar(std::string_view type) const {
  std::vector<std::string> out;
  for (const auto& level : ancestry(type)) {
    auto it = properties_.find(level);
    if (it == properties_.end()) continue;
    for (std::size_t idx : it->second) out.push_back(signatures_[idx].name);
  }
  return out;
}

std::vector<RelationTriple> Ontology::lrapsStar(std::string_view s,
                                                std::string_view t) const {
  const auto sChain = ancestry(s);
  const auto tChain = ancestry(t);
  std::vector<RelationTriple> out;
  for (const auto& tLevel : tChain) {
    for (const auto& sLevel : sChain) {
      auto it = relations_.find({sLevel, tLevel});
      if (it == relations_.end()) continue;
      for (std::size_t idx : it->second) {
        const Signature& sig = signatures_[idx];
        out.push_back(RelationTriple{sig.name, sig.args[0].multiplicity,
                                     sig.args[1].multiplicity, &sig});
      }
    }
  }
  return out;
}

std::optional<RelationTriple> Ontology::mostSalient(std::string_view s,
                                                    Multiplicity m,
                                                    std::string_view t,
                                                    Multiplicity n) const {
  for (auto& triple : lrapsStar(s, t)) {
    if (rank(triple.first) >= rank(m) && rank(triple.second) >= rank(n)) {
      return triple;
    }
  }
  return std::nullopt;
}

std::optional<std::string> Ontology::msr(std::string_view s, Multiplicity m,
                                         std::string_view t,
                                         Multiplicity n) const {
  if (auto hit = mostSalient(s, m, t, n)) return hit->relation;
  if (auto hit = mostSalient(t, n, s, m)) return hit->relation;
  return std::nullopt;
}

std::vector<const Signature*> Ontology::signaturesNamed(
    std::string_view name) const {
  std::vector<const Signature*> out;
  for (const auto& sig : signatures_) {
    if (sig.name == name) out.push_back(&sig);
  }
  return out;
}

const Signature* Ontology::property(std::string_view name) const {
  for (const auto& sig : signatures_) {
    if (sig.name == name && sig.arity() == 1) return &sig;
  }
  return nullptr;
}

bool Ontology::hasRelation(std::string_view name) const {
  return std::any_of(signatures_.begin(), signatures_.end(),
                     [&](const Signature& s) {
                       return s.name == name && s.arity() == 2;
                     });
}

const SalientActivityEntry* Ontology::salientActivities(
    std::string_view type) const {
  for (const auto& level : ancestry(type)) {
    for (const auto& entry : activities_) {
      if (entry.hostType == level) return &entry;
    }
  }
  return nullptr;
}

std::vector<std::string> Ontology::lint() const {
  std::set<std::string> earned;
  for (const auto& t : types_) {
    if (lpapStar(t.name).empty()) continue;
    for (auto& a : ancestry(t.name)) earned.insert(a);
  }
  std::vector<std::string> warnings;
  for (const auto& t : types_) {
    if (!earned.count(t.name)) {
      warnings.push_back("type '" + t.name +
                         "' has no significantly predicable property");
    }
  }
  return warnings;
}

namespace {

AnnotatedType parseArg(const std::string& token) {
  return parseAnnotatedType(token);
}

void parseLine(Ontology& onto, const std::vector<std::string>& tok) {
  auto syntax = [&](const std::string& why) {
    return Error(ErrorCode::Syntax, why);
  };
  const std::string& kw = tok[0];
  if (kw == "type") {
    if (tok.size() == 2) {
      onto.addType(tok[1], std::nullopt);
    } else if (tok.size() == 4 && tok[2] == "<") {
      onto.addType(tok[1], tok[3]);
    } else {
      throw syntax("expected 'type <Name> < <Parent>' or 'type Thing'");
    }
  } else if (kw == "prop") {
    if (tok.size() != 4 || tok[2] != "::") {
      throw syntax("expected 'prop <NAME> :: <Type>'");
    }
    onto.addProperty(tok[1], parseArg(tok[3]));
  } else if (kw == "rel") {
    if (tok.size() != 6 || tok[2] != "::" || tok[4] != "x") {
      throw syntax("expected 'rel <NAME> :: <Type> x <Type>'");
    }
    onto.addRelation(tok[1], parseArg(tok[3]), parseArg(tok[5]));
  } else if (kw == "sact") {
    if (tok.size() < 4 || tok[2] != "=>") {
      throw syntax("expected 'sact <Type> => <ACT>/<ROLE>, ...'");
    }
    std::string joined;
    for (std::size_t i = 3; i < tok.size(); ++i) joined += tok[i];
    std::vector<SalientActivity> acts;
    for (const auto& item : split(joined, ',')) {
      auto slash = item.find('/');
      if (item.empty() || slash == std::string::npos) {
        throw syntax("bad salient activity '" + item + "'");
      }
      acts.push_back({item.substr(0, slash), item.substr(slash + 1)});
    }
    onto.addSalientActivities(tok[1], std::move(acts));
  } else {
    throw syntax("unknown declaration '" + kw + "'");
  }
}

}  // namespace

Ontology parseOntology(std::string_view text) {
  Ontology onto;
  std::size_t lineNo = 0;
  for (const auto& raw : splitLines(text)) {
    ++lineNo;
    auto tok = tokenize(stripComment(raw));
    if (tok.empty()) continue;
    try {
      parseLine(onto, tok);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "ontology line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  onto.freeze();
  return onto;
}

Ontology loadOntologyFile(const std::filesystem::path& path) {
  return parseOntology(readFile(path));
}

}  // namespace ontosem
