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

#include "ontosem/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "morphology.hpp"
#include "ontosem/error.hpp"
#include "text_util.hpp"

namespace ontosem {

NounPhrase NounPhrase::properName(std::string label) {
  NounPhrase np;
  np.kind = Kind::ProperName;
  np.label = std::move(label);
  return np;
}

NounPhrase NounPhrase::noun(Kind determiner, std::vector<std::string> adjs,
                            std::string head,
                            std::optional<std::string> compound) {
  NounPhrase np;
  np.kind = determiner;
  np.determiner = determiner;
  np.adjs = std::move(adjs);
  np.head = std::move(head);
  np.compound = std::move(compound);
  return np;
}

std::vector<std::string> tokenizeSentence(std::string_view sentence) {
  std::string cleaned;
  for (char c : sentence) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '-') {
      cleaned += static_cast<char>(std::tolower(u));
    } else {
      cleaned += ' ';
    }
  }
  return tokenize(cleaned);
}

namespace {

const std::set<std::string, std::less<>> kFunctionWords{
    "a",   "an",  "the",  "any", "every", "his",  "her", "their", "is",
    "are", "can", "and",  "then", "he",   "she",  "they", "it",   "me",
    "really"};

bool isNumber(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

class SentenceParser {
 public:
  SentenceParser(const Lexicon& lex, std::vector<std::string> tokens)
      : lex_(lex), tok_(std::move(tokens)) {
    std::set<std::string, std::less<>> parts;
    for (const auto& e : lex_.all()) {
      for (const auto& w : tokenize(e.surface)) parts.insert(w);
    }
    for (const auto& t : tok_) {
      if (kFunctionWords.count(t) || isNumber(t) || parts.count(t) ||
          lex_.analyzeVerb(t)) {
        continue;
      }
      throw Error(ErrorCode::UnknownWord, "unknown word '" + t + "'");
    }
  }

  ParseTree sentence(std::optional<std::string> anchor) {
    if (tok_.empty()) fail("empty sentence");
    if (tok_[0] == "he" || tok_[0] == "she" || tok_[0] == "they") {
      PronounClause pc;
      pc.pronoun = tok_[0] == "they" ? "they" : "he";
      ++pos_;
      pc.anchor = std::move(anchor);
      auto clause = verbClause(/*progressiveOk=*/true);
      pc.verb = clause.verb;
      pc.tag = clause.tag;
      pc.object = clause.object;
      end();
      return pc;
    }
    NounPhrase subject = nounPhrase(/*subject=*/true);
    if (accept("is") || accept("are")) {
      Copular c{std::move(subject), complement()};
      end();
      return c;
    }
    Transitive t;
    t.subject = std::move(subject);
    auto first = verbClause(false);
    t.verb = first.verb;
    t.tag = first.tag;
    t.object = first.object;
    if (accept("and")) {
      accept("then");
      if (!accept("he") && !accept("she") && !accept("they")) {
        if (t.subject.kind == NounPhrase::Kind::ProperName) {
          accept(t.subject.label);
        }
      }
      t.next = verbClause(false);
    }
    end();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    std::string at = pos_ < tok_.size() ? " at '" + tok_[pos_] + "'" : "";
    throw Error(ErrorCode::UngrammaticalInput, why + at);
  }

  bool atEnd() const { return pos_ >= tok_.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return atEnd() ? empty : tok_[pos_];
  }
  bool accept(std::string_view word) {
    if (!atEnd() && tok_[pos_] == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  void end() {
    if (!atEnd()) fail("unexpected trailing words");
  }

  // Longest noun (type or deverbal) starting at the cursor.
  std::optional<std::string> noun() {
    for (std::size_t n = std::min(lex_.maxWords(), tok_.size() - pos_); n >= 1;
         --n) {
      std::string words;
      for (std::size_t i = 0; i < n; ++i) {
        words += (i ? " " : "") + tok_[pos_ + i];
      }
      if (lex_.find<TypeNoun>(words) || lex_.find<DeverbalNoun>(words)) {
        pos_ += n;
        return words;
      }
    }
    return std::nullopt;
  }

  bool isAdjective(const std::string& w) const {
    return lex_.find<Adjective>(w) != nullptr;
  }

  NounPhrase nounPhrase(bool subject) {
    if (atEnd()) fail("expected a noun phrase");
    const std::string w = peek();
    if (lex_.find<ProperNoun>(w)) {
      ++pos_;
      return NounPhrase::properName(w);
    }
    if (isNumber(w)) {
      ++pos_;
      NounPhrase np;
      np.kind = NounPhrase::Kind::Number;
      np.label = w;
      np.number = std::stoll(w);
      return np;
    }
    if (subject && lex_.find<CopularComplement>(w)) {
      ++pos_;
      NounPhrase np;
      np.kind = NounPhrase::Kind::Bare;
      np.label = w;
      return np;
    }
    if (!subject && w == "it") {
      ++pos_;
      NounPhrase np;
      np.kind = NounPhrase::Kind::Anaphor;
      np.label = w;
      return np;
    }
    if (!subject && w == "me") {
      ++pos_;
      NounPhrase np;
      np.kind = NounPhrase::Kind::Speaker;
      np.label = w;
      return np;
    }
    NounPhrase::Kind det;
    if (accept("a") || accept("an")) det = NounPhrase::Kind::Indef;
    else if (accept("the")) det = NounPhrase::Kind::Def;
    else if (accept("any") || accept("every")) det = NounPhrase::Kind::Universal;
    else if (!subject && (accept("his") || accept("her") || accept("their")))
      det = NounPhrase::Kind::Possessive;
    else fail("expected a determiner");

    std::vector<std::string> adjs;
    std::vector<std::string> adjs2;
    bool coordinated = false;
    while (!atEnd()) {
      if (isAdjective(peek())) {
        (coordinated ? adjs2 : adjs).push_back(peek());
        ++pos_;
      } else if (!coordinated && !adjs.empty() && peek() == "and" &&
                 pos_ + 1 < tok_.size() && isAdjective(tok_[pos_ + 1])) {
        coordinated = true;
        ++pos_;
      } else {
        break;
      }
    }
    auto head = noun();
    if (!head) fail("expected a noun");
    std::optional<std::string> compound;
    if (auto second = noun()) {
      compound = *head;
      head = second;
    }
    NounPhrase np = NounPhrase::noun(det, std::move(adjs), *head, compound);
    if (coordinated) {
      np.kind = NounPhrase::Kind::Coordinated;
      np.adjs2 = std::move(adjs2);
    }
    return np;
  }

  NounPhrase complement() {
    if (atEnd()) fail("expected a complement");
    const std::string w = peek();
    if (lex_.find<CopularComplement>(w) && pos_ + 1 == tok_.size()) {
      ++pos_;
      NounPhrase np;
      np.kind = NounPhrase::Kind::Bare;
      np.label = w;
      return np;
    }
    if (isAdjective(w)) return adjectival();
    NounPhrase np = nounPhrase(false);
    if (np.kind == NounPhrase::Kind::Possessive ||
        np.kind == NounPhrase::Kind::Anaphor ||
        np.kind == NounPhrase::Kind::Speaker) {
      fail("unsupported copular complement");
    }
    return np;
  }

  // ADJ (and ADJ)* running to the end of the sentence.
  NounPhrase adjectival() {
    NounPhrase np;
    np.kind = NounPhrase::Kind::Adjectival;
    while (true) {
      if (atEnd() || !isAdjective(peek())) fail("expected an adjective");
      np.adjs.push_back(peek());
      ++pos_;
      if (atEnd()) return np;
      if (!accept("and")) fail("expected 'and'");
    }
  }

  VerbClause verbClause(bool progressiveOk) {
    VerbClause c;
    bool progressive = false;
    if (progressiveOk && (accept("is") || accept("are"))) progressive = true;
    accept("really");
    const bool modal = !progressive && accept("can");
    if (atEnd()) fail("expected a verb");
    auto form = lex_.analyzeVerb(peek(), modal);
    if (!form) fail("expected a verb");
    if (progressive && form->tag != Tag::Does) fail("expected an -ing form");
    ++pos_;
    c.verb = form->base;
    c.tag = form->tag;
    c.object = nounPhrase(false);
    return c;
  }

  const Lexicon& lex_;
  std::vector<std::string> tok_;
  std::size_t pos_ = 0;
};

bool doublesFinal(std::string_view base) {
  auto vowel = [](char c) { return std::string_view("aeiou").find(c) !=
                                   std::string_view::npos; };
  const std::size_t n = base.size();
  if (n < 3 || n > 4) return false;
  const char last = base[n - 1];
  return !vowel(base[n - 3]) && vowel(base[n - 2]) && !vowel(last) &&
         std::string_view("wxy").find(last) == std::string_view::npos;
}

std::string progressive(std::string_view base) {
  std::string b(base);
  if (b.size() > 2 && b.back() == 'e' && b[b.size() - 2] != 'e') {
    b.pop_back();
  } else if (doublesFinal(b)) {
    b += b.back();
  }
  return b + "ing";
}

std::string npText(const NounPhrase& np) {
  using K = NounPhrase::Kind;
  auto det = [](K k) -> std::string {
    switch (k) {
      case K::Indef: return "a";
      case K::Def: return "the";
      case K::Universal: return "any";
      case K::Possessive: return "his";
      default: return "a";
    }
  };
  auto join = [](const std::vector<std::string>& ws) {
    std::string out;
    for (const auto& w : ws) out += w + " ";
    return out;
  };
  switch (np.kind) {
    case K::ProperName:
    case K::Bare:
    case K::Anaphor:
    case K::Speaker:
      return np.label;
    case K::Number:
      return std::to_string(np.number);
    case K::Adjectival: {
      std::string out;
      for (const auto& w : np.adjs) out += (out.empty() ? "" : " and ") + w;
      return out;
    }
    case K::Coordinated: {
      std::string out = det(np.determiner) + " " + join(np.adjs);
      out += "and " + join(np.adjs2);
      if (np.compound) out += *np.compound + " ";
      return out + np.head;
    }
    default: {
      std::string out = det(np.kind) + " " + join(np.adjs);
      if (np.compound) out += *np.compound + " ";
      return out + np.head;
    }
  }
}

std::string clauseText(std::string_view verb, Tag tag) {
  if (tag == Tag::Can) return "can " + std::string(verb);
  return inflect(verb, tag);
}

}  // namespace

std::string inflect(std::string_view base, Tag tag) {
  std::string b(base);
  switch (tag) {
    case Tag::Did: {
      for (const auto& [past, stem] : kIrregularPast) {
        if (stem == base && !isVariantPast(past)) return std::string(past);
      }
      if (!b.empty() && b.back() == 'e') return b + "d";
      if (doublesFinal(b)) return b + b.back() + "ed";
      return b + "ed";
    }
    case Tag::Does: {
      auto ends = [&](std::string_view s) {
        return b.size() >= s.size() && b.substr(b.size() - s.size()) == s;
      };
      if (ends("s") || ends("x") || ends("ch") || ends("sh")) return b + "es";
      return b + "s";
    }
    default:
      return b;
  }
}

ParseTree parse(const Lexicon& lex, std::string_view sentence,
                std::optional<std::string> anchor) {
  return SentenceParser(lex, tokenizeSentence(sentence))
      .sentence(std::move(anchor));
}

std::string toSentence(const Lexicon&, const ParseTree& tree) {
  if (const auto* c = std::get_if<Copular>(&tree)) {
    return npText(c->subject) + " is " + npText(c->complement);
  }
  if (const auto* t = std::get_if<Transitive>(&tree)) {
    std::string out = npText(t->subject) + " " + clauseText(t->verb, t->tag) +
                      " " + npText(t->object);
    if (t->next) {
      out += " and then he " + clauseText(t->next->verb, t->next->tag) + " " +
             npText(t->next->object);
    }
    return out;
  }
  const auto& p = std::get<PronounClause>(tree);
  if (p.tag == Tag::Does) {
    return p.pronoun + (p.pronoun == "they" ? " are " : " is ") +
           progressive(p.verb) + " " + npText(p.object);
  }
  return p.pronoun + " " + clauseText(p.verb, p.tag) + " " + npText(p.object);
}

namespace {

std::string describeNp(const NounPhrase& np) {
  using K = NounPhrase::Kind;
  auto list = [](const std::vector<std::string>& ws) {
    std::string out = "[";
    for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? ", " : "") + ws[i];
    return out + "]";
  };
  auto noun = [&](const char* name) {
    std::string out = std::string(name) + "(" + list(np.adjs) + ", " + np.head;
    if (np.compound) out += ", compound=" + *np.compound;
    return out + ")";
  };
  switch (np.kind) {
    case K::ProperName: return "ProperName(" + np.label + ")";
    case K::Number: return "Number(" + np.label + ")";
    case K::Bare: return "Bare(" + np.label + ")";
    case K::Anaphor: return "Anaphor(it)";
    case K::Speaker: return "Speaker(me)";
    case K::Adjectival: return "Adjectival(" + list(np.adjs) + ")";
    case K::Indef: return noun("Indef");
    case K::Def: return noun("Def");
    case K::Universal: return noun("Universal");
    case K::Possessive: return noun("Possessive");
    case K::Coordinated:
      return "Coordinated(" + list(np.adjs) + ", " + list(np.adjs2) + ", " +
             np.head + ")";
  }
  return "";
}

}  // namespace

std::string describe(const ParseTree& tree) {
  if (const auto* c = std::get_if<Copular>(&tree)) {
    return "Copular(" + describeNp(c->subject) + ", " +
           describeNp(c->complement) + ")";
  }
  if (const auto* t = std::get_if<Transitive>(&tree)) {
    std::string out = "Transitive(" + describeNp(t->subject) + ", " +
                      toUpper(t->verb) + ", " + std::string(format(t->tag)) +
                      ", " + describeNp(t->object);
    if (t->next) {
      out += ", then " + toUpper(t->next->verb) + ", " +
             std::string(format(t->next->tag)) + ", " +
             describeNp(t->next->object);
    }
    return out + ")";
  }
  const auto& p = std::get<PronounClause>(tree);
  return "PronounClause(" + p.pronoun + ", " + toUpper(p.verb) + ", " +
         std::string(format(p.tag)) + ", " + describeNp(p.object) + ", " +
         p.anchor.value_or("-") + ")";
}

}  // namespace ontosem
