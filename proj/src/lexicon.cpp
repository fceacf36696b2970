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

#include "ontosem/lexicon.hpp"

#include <algorithm>
#include <utility>

#include "morphology.hpp"
#include "ontosem/error.hpp"
#include "text_util.hpp"

namespace ontosem {

std::string_view format(ComplementKind kind) {
  switch (kind) {
    case ComplementKind::PropertyNoun: return "property";
    case ComplementKind::StateNoun: return "state";
    case ComplementKind::ProcessNoun: return "process";
    case ComplementKind::ActivityNoun: return "activity";
  }
  return "";
}

std::string_view kindType(ComplementKind kind) {
  switch (kind) {
    case ComplementKind::PropertyNoun: return "Property";
    case ComplementKind::StateNoun: return "State";
    case ComplementKind::ProcessNoun: return "Process";
    case ComplementKind::ActivityNoun: return "Activity";
  }
  return "";
}

std::string describe(const LexEntry& entry) {
  struct Visitor {
    std::string operator()(const ProperNoun& r) const {
      return "pname :: " + r.type;
    }
    std::string operator()(const TypeNoun& r) const {
      return "noun => " + r.type;
    }
    std::string operator()(const DeverbalNoun& r) const {
      return "noun => deverbal(" + r.activity + ", " + r.role + ")";
    }
    std::string operator()(const Adjective& r) const {
      return "adj => " + r.pred + " :: " + r.appliesTo;
    }
    std::string operator()(const Verb& r) const {
      return "verb => " + r.relation;
    }
    std::string operator()(const CopularComplement& r) const {
      std::string out = "cop => " + std::string(format(r.kind)) + "(" + r.pred;
      if (r.holder) out += ", " + *r.holder;
      return out + ")";
    }
  };
  return entry.surface + " " + std::visit(Visitor{}, entry.recipe);
}

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::InvalidLexicon, why);
}

void requireType(const Ontology& onto, const std::string& type,
                 const std::string& word) {
  if (!onto.contains(type)) {
    invalid("'" + word + "' refers to unknown type '" + type + "'");
  }
}

const Signature& requireProperty(const Ontology& onto, const std::string& pred,
                                 const std::string& word) {
  const Signature* sig = onto.property(pred);
  if (sig == nullptr) {
    invalid("'" + word + "' refers to undeclared property '" + pred + "'");
  }
  return *sig;
}

void validate(const LexEntry& e, const Ontology& onto) {
  const std::string& w = e.surface;
  if (const auto* r = std::get_if<ProperNoun>(&e.recipe)) {
    requireType(onto, r->type, w);
  } else if (const auto* r = std::get_if<TypeNoun>(&e.recipe)) {
    requireType(onto, r->type, w);
  } else if (const auto* r = std::get_if<DeverbalNoun>(&e.recipe)) {
    const Signature& act = requireProperty(onto, r->activity, w);
    if (!onto.subsumes(act.args[0].base, "Activity")) {
      invalid("'" + w + "': '" + r->activity + "' is not an activity");
    }
    bool ok = false;
    for (const Signature* s : onto.signaturesNamed(r->role)) {
      if (s->arity() == 2 && onto.subsumes("Activity", s->args[0].base)) {
        ok = true;
      }
    }
    if (!ok) invalid("'" + w + "': role '" + r->role + "' is not declared");
  } else if (const auto* r = std::get_if<Adjective>(&e.recipe)) {
    requireType(onto, r->appliesTo, w);
    const Signature& sig = requireProperty(onto, r->pred, w);
    if (sig.args[0].base != r->appliesTo) {
      invalid("'" + w + "': " + r->pred + " is declared over " +
              sig.args[0].base + ", not " + r->appliesTo);
    }
  } else if (const auto* r = std::get_if<Verb>(&e.recipe)) {
    if (!onto.hasRelation(r->relation)) {
      invalid("'" + w + "' refers to undeclared relation '" + r->relation +
              "'");
    }
  } else if (const auto* r = std::get_if<CopularComplement>(&e.recipe)) {
    const Signature& sig = requireProperty(onto, r->pred, w);
    const std::string kind(kindType(r->kind));
    requireType(onto, kind, w);
    if (!onto.subsumes(sig.args[0].base, kind)) {
      invalid("'" + w + "': " + r->pred + " is not a " +
              std::string(format(r->kind)));
    }
    if (r->holder) requireType(onto, *r->holder, w);
  }
}

}  // namespace

void Lexicon::add(LexEntry entry, const Ontology& onto) {
  validate(entry, onto);
  const std::size_t words = tokenize(entry.surface).size();
  maxWords_ = std::max(maxWords_, words);
  index_[entry.surface].push_back(entries_.size());
  entries_.push_back(std::move(entry));
}

const LexEntry& Lexicon::lookup(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) {
    throw Error(ErrorCode::UnknownWord,
                "unknown word '" + std::string(word) + "'");
  }
  return entries_[it->second.front()];
}

std::vector<const LexEntry*> Lexicon::entries(std::string_view word) const {
  std::vector<const LexEntry*> out;
  auto it = index_.find(word);
  if (it == index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

std::optional<VerbForm> Lexicon::analyzeVerb(std::string_view word,
                                             bool afterCan) const {
  auto isVerb = [&](std::string_view base) {
    return find<Verb>(base) != nullptr;
  };
  if (afterCan) {
    if (isVerb(word)) return VerbForm{std::string(word), Tag::Can};
    return std::nullopt;
  }
  for (const auto& [form, base] : kIrregularPast) {
    if (form == word && isVerb(base)) {
      return VerbForm{std::string(base), Tag::Did};
    }
  }
  auto endsWith = [&](std::string_view suffix) {
    return word.size() > suffix.size() &&
           word.substr(word.size() - suffix.size()) == suffix;
  };
  // Strip a suffix and try the stem as is, with a final e, and undoubled.
  auto stems = [&](std::string_view suffix) {
    std::vector<std::string> out;
    std::string stem(word.substr(0, word.size() - suffix.size()));
    out.push_back(stem);
    out.push_back(stem + "e");
    if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2]) {
      out.push_back(stem.substr(0, stem.size() - 1));
    }
    return out;
  };
  if (endsWith("ed")) {
    for (const auto& s : stems("ed")) {
      if (isVerb(s)) return VerbForm{s, Tag::Did};
    }
  }
  if (endsWith("ing")) {
    for (const auto& s : stems("ing")) {
      if (isVerb(s)) return VerbForm{s, Tag::Does};
    }
  }
  if (endsWith("es")) {
    std::string s(word.substr(0, word.size() - 2));
    if (isVerb(s)) return VerbForm{s, Tag::Does};
  }
  if (endsWith("s")) {
    std::string s(word.substr(0, word.size() - 1));
    if (isVerb(s)) return VerbForm{s, Tag::Does};
  }
  if (isVerb(word)) return VerbForm{std::string(word), Tag::Does};
  return std::nullopt;
}

namespace {

// "deverbal(A, B)" -> {"deverbal", {"A", "B"}}
std::optional<std::pair<std::string, std::vector<std::string>>> call(
    const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return std::nullopt;
  std::string head = trim(text.substr(0, open));
  std::vector<std::string> args =
      split(text.substr(open + 1, text.size() - open - 2), ',');
  return std::make_pair(head, args);
}

LexEntry parseEntry(const std::vector<std::string>& tok,
                    const std::string& line) {
  auto syntax = [](const std::string& why) {
    return Error(ErrorCode::Syntax, why);
  };
  const std::string& kw = tok[0];
  if (kw == "pname") {
    if (tok.size() == 2) return LexEntry{tok[1], ProperNoun{}};
    if (tok.size() == 4 && tok[2] == "::") {
      return LexEntry{tok[1], ProperNoun{tok[3]}};
    }
    throw syntax("expected 'pname <label> [:: <Type>]'");
  }
  auto arrow = line.find("=>");
  if (arrow == std::string::npos) throw syntax("missing '=>'");
  std::string lhs = trim(line.substr(0, arrow));
  std::string rhs = trim(line.substr(arrow + 2));
  auto words = tokenize(lhs);
  words.erase(words.begin());
  if (words.empty() || rhs.empty()) throw syntax("empty entry");
  std::string surface;
  for (const auto& w : words) surface += (surface.empty() ? "" : " ") + w;

  if (kw == "noun") {
    if (auto c = call(rhs)) {
      if (c->first != "deverbal" || c->second.size() != 2) {
        throw syntax("expected deverbal(<ACTIVITY>, <ROLE>)");
      }
      return LexEntry{surface, DeverbalNoun{c->second[0], c->second[1]}};
    }
    return LexEntry{surface, TypeNoun{rhs}};
  }
  if (words.size() != 1) throw syntax("only nouns may span several words");
  if (kw == "adj") {
    auto parts = tokenize(rhs);
    if (parts.size() != 3 || parts[1] != "::") {
      throw syntax("expected 'adj <word> => <PRED> :: <Type>'");
    }
    return LexEntry{surface, Adjective{parts[0], parts[2]}};
  }
  if (kw == "verb") {
    if (tokenize(rhs).size() != 1) throw syntax("expected one relation");
    return LexEntry{surface, Verb{rhs}};
  }
  if (kw == "cop") {
    auto c = call(rhs);
    if (!c || c->second.empty() || c->second.size() > 2) {
      throw syntax("expected <kind>(<PRED>[, <Holder>])");
    }
    ComplementKind kind;
    if (c->first == "property") kind = ComplementKind::PropertyNoun;
    else if (c->first == "state") kind = ComplementKind::StateNoun;
    else if (c->first == "process") kind = ComplementKind::ProcessNoun;
    else if (c->first == "activity") kind = ComplementKind::ActivityNoun;
    else throw syntax("unknown complement kind '" + c->first + "'");
    CopularComplement cc{kind, c->second[0], std::nullopt};
    if (c->second.size() == 2) cc.holder = c->second[1];
    return LexEntry{surface, cc};
  }
  throw syntax("unknown entry kind '" + kw + "'");
}

}  // namespace

Lexicon parseLexicon(std::string_view text, const Ontology& onto) {
  Lexicon lex;
  std::size_t lineNo = 0;
  for (const auto& raw : splitLines(text)) {
    ++lineNo;
    std::string line = trim(stripComment(raw));
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    try {
      lex.add(parseEntry(tok, line), onto);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "lexicon line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return lex;
}

Lexicon loadLexiconFile(const std::filesystem::path& path,
                        const Ontology& onto) {
  return parseLexicon(readFile(path), onto);
}

}  // namespace ontosem
