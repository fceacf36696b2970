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

// Hand-rolled random generators for the property suites.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ontosem/lexicon.hpp"
#include "ontosem/logic_form.hpp"
#include "ontosem/ontology.hpp"
#include "ontosem/parser.hpp"
#include "ontosem/unification.hpp"

namespace ontosem::testing {

// Seed comes from ONTOSEM_TEST_SEED when set so failures can be replayed.
inline std::uint64_t testSeed() {
  if (const char* s = std::getenv("ONTOSEM_TEST_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return 20260714u;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed = testSeed()) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  ExistenceMark mark() {
    switch (below(3)) {
      case 0: return ExistenceMark::Plain;
      case 1: return ExistenceMark::MustExist;
      default: return ExistenceMark::NeedNotExist;
    }
  }
  Multiplicity multiplicity() {
    return chance(0.5) ? Multiplicity::One : Multiplicity::Many;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<std::string> typeNames(const Ontology& onto) {
  std::vector<std::string> out;
  for (const auto& n : onto.types()) out.push_back(n.name);
  return out;
}

inline AnnotatedType randomAnnotated(Gen& g, const Ontology& onto) {
  const auto types = onto.types();
  return AnnotatedType(types[g.below(types.size())].name, g.mark(),
                       g.multiplicity());
}

// Three annotated types drawn from one parent chain, in random order.
inline std::vector<AnnotatedType> randomChainTriple(Gen& g,
                                                    const Ontology& onto) {
  const auto types = onto.types();
  const auto chain = onto.ancestry(types[g.below(types.size())].name);
  std::vector<AnnotatedType> out;
  for (int i = 0; i < 3; ++i) {
    out.emplace_back(chain[g.below(chain.size())], g.mark(), g.multiplicity());
  }
  return out;
}

// A random tree ontology with properties and relations over generated names.
inline Ontology randomOntology(Gen& g, std::size_t maxTypes = 14) {
  Ontology onto;
  onto.addType(std::string(kRootType), std::nullopt);
  std::vector<std::string> names{std::string(kRootType)};
  const std::size_t n = 2 + g.below(maxTypes - 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::string name = "T" + std::to_string(i);
    onto.addType(name, names[g.below(names.size())]);
    names.push_back(name);
  }
  const std::size_t props = g.below(2 * n);
  for (std::size_t i = 0; i < props; ++i) {
    onto.addProperty("P" + std::to_string(i),
                     AnnotatedType(g.pick(names), g.mark(), Multiplicity::One));
  }
  const std::size_t rels = g.below(3 * n);
  for (std::size_t i = 0; i < rels; ++i) {
    // A few repeated names exercise overloaded relations.
    const std::string name = "R" + std::to_string(g.below(rels + 1));
    onto.addRelation(name,
                     AnnotatedType(g.pick(names), g.mark(), g.multiplicity()),
                     AnnotatedType(g.pick(names), g.mark(), g.multiplicity()));
  }
  onto.freeze();
  return onto;
}

struct FormulaOptions {
  std::vector<std::string> types{"Thing", "Human", "Car", "Activity", "Book"};
  bool marks = true;         // existence marks and multiplicities on types
  bool occurrenceTypes = true;  // typed predicate arguments
  bool bottoms = true;
  int maxDepth = 4;
};

class FormulaGen {
 public:
  FormulaGen(Gen& g, FormulaOptions opts) : g_(g), opts_(std::move(opts)) {}

  Formula closed() {
    scope_.clear();
    counter_ = 0;
    return node(opts_.maxDepth);
  }

 private:
  AnnotatedType type() {
    AnnotatedType t(g_.pick(opts_.types));
    if (opts_.marks) {
      t.existence = g_.mark();
      t.multiplicity = g_.multiplicity();
    }
    return t;
  }

  Term term() {
    const std::size_t choice = g_.below(10);
    Term t;
    if (choice < 6 && !scope_.empty()) {
      t = Term::var(g_.pick(scope_));
    } else if (choice < 8) {
      static const std::vector<std::string> labels{"jon", "olga", "me",
                                                   "sheba"};
      t = Term::constant(g_.pick(labels));
    } else {
      return Term::number(g_.integer(-5, 120));
    }
    if (opts_.occurrenceTypes && g_.chance(0.2)) t.type = type();
    return t;
  }

  Formula leaf() {
    const std::size_t choice = g_.below(10);
    if (opts_.bottoms && choice == 0) return Formula::bottom();
    if (choice == 1) return Formula::equal(term(), term());
    static const std::vector<std::string> preds{"P", "Q", "AGENT", "HAS",
                                                "MADE-OF", "Exist"};
    static const std::vector<Tag> tags{Tag::None, Tag::None, Tag::Does,
                                       Tag::Did, Tag::Can};
    std::vector<Term> args;
    const std::size_t arity = g_.below(3);
    for (std::size_t i = 0; i < arity; ++i) args.push_back(term());
    return Formula::pred(g_.pick(preds), std::move(args), g_.pick(tags));
  }

  Formula node(int depth) {
    if (depth <= 0) return leaf();
    switch (g_.below(7)) {
      case 0:
      case 1: {
        static const std::vector<Quantifier> qs{
            Quantifier::Exists, Quantifier::ExistsUnique, Quantifier::Forall};
        const Quantifier q = g_.pick(qs);
        Term binder;
        if (g_.chance(0.2)) {
          static const std::vector<std::string> labels{"jon", "liz", "me"};
          binder = Term::constant(g_.pick(labels), type());
        } else {
          // Occasional reuse of a name in scope exercises shadowing.
          std::string name = !scope_.empty() && g_.chance(0.1)
                                 ? g_.pick(scope_)
                                 : fresh();
          binder = Term::var(name, type());
        }
        const bool isVar = binder.kind == Term::Kind::Var;
        if (isVar) scope_.push_back(binder.name);
        Formula body = node(depth - 1);
        if (isVar) scope_.pop_back();
        return Formula::quant(q, std::move(binder), std::move(body));
      }
      case 2:
      case 3: {
        std::vector<Formula> kids;
        const std::size_t n = g_.below(4);
        for (std::size_t i = 0; i < n; ++i) kids.push_back(node(depth - 1));
        return g_.chance(0.6) ? Formula::conj(std::move(kids))
                              : Formula::disj(std::move(kids));
      }
      case 4:
        return Formula::implies(node(depth - 1), node(depth - 1));
      default:
        return leaf();
    }
  }

  std::string fresh() {
    static const std::string letters = "xyzabcdefghk";
    const std::size_t i = counter_++;
    std::string name(1, letters[i % letters.size()]);
    if (i >= letters.size()) name += std::to_string(i / letters.size());
    return name;
  }

  Gen& g_;
  FormulaOptions opts_;
  std::vector<std::string> scope_;
  std::size_t counter_ = 0;
};

// Consistently renames bound variables and shuffles And/Or children.
class AlphaVariant {
 public:
  explicit AlphaVariant(Gen& g) : g_(g) {}

  Formula operator()(const Formula& f) {
    map_.clear();
    counter_ = 0;
    return go(f);
  }

 private:
  Term rename(const Term& t) const {
    if (t.kind != Term::Kind::Var) return t;
    for (auto it = map_.rbegin(); it != map_.rend(); ++it) {
      if (it->first == t.name) {
        Term out = t;
        out.name = it->second;
        return out;
      }
    }
    return t;
  }

  Formula go(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::Quant: {
        Term b = f.binder();
        if (b.kind == Term::Kind::Var) {
          const std::string fresh = "v" + std::to_string(counter_++);
          map_.emplace_back(b.name, fresh);
          b.name = fresh;
          Formula body = go(f.body());
          map_.pop_back();
          return Formula::quant(f.quantifier(), b, body);
        }
        return Formula::quant(f.quantifier(), b, go(f.body()));
      }
      case K::Pred: {
        std::vector<Term> args;
        for (const auto& a : f.args()) args.push_back(rename(a));
        return Formula::pred(f.name(), args, f.tag());
      }
      case K::Equal:
        return Formula::equal(rename(f.args()[0]), rename(f.args()[1]));
      case K::And:
      case K::Or: {
        std::vector<Formula> kids;
        for (const auto& c : f.children()) kids.push_back(go(c));
        g_.shuffle(kids);
        return f.kind() == K::And ? Formula::conj(kids) : Formula::disj(kids);
      }
      case K::Implies:
        return Formula::implies(go(f.antecedent()), go(f.consequent()));
      case K::Bottom:
        return f;
    }
    return f;
  }

  Gen& g_;
  std::vector<std::pair<std::string, std::string>> map_;
  std::size_t counter_ = 0;
};

inline std::vector<AdjectiveUse> randomAdjChain(Gen& g, const Lexicon& lex,
                                                std::size_t maxLen = 5) {
  std::vector<AdjectiveUse> pool;
  for (const auto& e : lex.all()) {
    if (const auto* a = std::get_if<Adjective>(&e.recipe)) {
      pool.push_back({e.surface, a->appliesTo});
    }
  }
  std::vector<AdjectiveUse> out;
  const std::size_t n = 1 + g.below(maxLen);
  for (std::size_t i = 0; i < n; ++i) out.push_back(g.pick(pool));
  return out;
}

// Random trees inside the fragment the grammar produces.
class TreeGen {
 public:
  TreeGen(Gen& g, const Lexicon& lex) : g_(g) {
    for (const auto& e : lex.all()) {
      if (std::holds_alternative<ProperNoun>(e.recipe)) names_.push_back(e.surface);
      if (std::holds_alternative<TypeNoun>(e.recipe) ||
          std::holds_alternative<DeverbalNoun>(e.recipe)) {
        nouns_.push_back(e.surface);
      }
      if (std::holds_alternative<Adjective>(e.recipe)) adjs_.push_back(e.surface);
      if (std::holds_alternative<Verb>(e.recipe)) verbs_.push_back(e.surface);
      if (std::holds_alternative<CopularComplement>(e.recipe)) {
        cops_.push_back(e.surface);
      }
    }
  }

  ParseTree tree() {
    switch (g_.below(3)) {
      case 0: {
        Copular c;
        c.subject = subject();
        c.complement = complement();
        return c;
      }
      case 1: {
        Transitive t;
        t.subject = subject();
        t.verb = g_.pick(verbs_);
        t.tag = tag();
        t.object = object();
        if (g_.chance(0.3)) {
          t.next = VerbClause{g_.pick(verbs_), tag(), object()};
        }
        return t;
      }
      default: {
        PronounClause p;
        p.pronoun = g_.chance(0.5) ? "he" : "they";
        p.verb = g_.pick(verbs_);
        p.tag = tag();
        p.object = object();
        if (g_.chance(0.7)) p.anchor = "Car";
        return p;
      }
    }
  }

 private:
  Tag tag() {
    static const std::vector<Tag> tags{Tag::Does, Tag::Did, Tag::Can};
    return g_.pick(tags);
  }

  std::vector<std::string> adjectives(std::size_t min) {
    std::vector<std::string> out;
    const std::size_t n = min + g_.below(3);
    for (std::size_t i = 0; i < n; ++i) out.push_back(g_.pick(adjs_));
    return out;
  }

  NounPhrase nounPhrase(std::vector<NounPhrase::Kind> dets) {
    const auto det = g_.pick(dets);
    std::optional<std::string> compound;
    if (g_.chance(0.15)) compound = g_.pick(nouns_);
    if (g_.chance(0.15)) {
      NounPhrase np = NounPhrase::noun(det, adjectives(1), g_.pick(nouns_),
                                       compound);
      np.kind = NounPhrase::Kind::Coordinated;
      np.adjs2 = adjectives(1);
      return np;
    }
    return NounPhrase::noun(det, adjectives(0), g_.pick(nouns_), compound);
  }

  NounPhrase number() {
    NounPhrase np;
    np.kind = NounPhrase::Kind::Number;
    np.number = g_.integer(0, 500);
    np.label = std::to_string(np.number);
    return np;
  }

  NounPhrase word(NounPhrase::Kind kind, std::string label) {
    NounPhrase np;
    np.kind = kind;
    np.label = std::move(label);
    return np;
  }

  NounPhrase subject() {
    using K = NounPhrase::Kind;
    switch (g_.below(4)) {
      case 0: return NounPhrase::properName(g_.pick(names_));
      case 1: return g_.chance(0.5) ? number() : word(K::Bare, g_.pick(cops_));
      default: return nounPhrase({K::Indef, K::Def, K::Universal});
    }
  }

  NounPhrase object() {
    using K = NounPhrase::Kind;
    switch (g_.below(5)) {
      case 0: return NounPhrase::properName(g_.pick(names_));
      case 1: return g_.chance(0.5) ? word(K::Anaphor, "it")
                                    : word(K::Speaker, "me");
      case 2: return number();
      default: return nounPhrase({K::Indef, K::Def, K::Universal, K::Possessive});
    }
  }

  NounPhrase complement() {
    using K = NounPhrase::Kind;
    switch (g_.below(5)) {
      case 0: return NounPhrase::properName(g_.pick(names_));
      case 1: return word(K::Bare, g_.pick(cops_));
      case 2: return number();
      case 3: {
        NounPhrase np;
        np.kind = K::Adjectival;
        const std::size_t n = 1 + g_.below(3);
        for (std::size_t i = 0; i < n; ++i) np.adjs.push_back(g_.pick(adjs_));
        return np;
      }
      default: return nounPhrase({K::Indef, K::Def, K::Universal});
    }
  }

  Gen& g_;
  std::vector<std::string> names_, nouns_, adjs_, verbs_, cops_;
};

}  // namespace ontosem::testing
