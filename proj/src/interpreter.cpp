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

#include "ontosem/interpreter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "ontosem/unification.hpp"
#include "text_util.hpp"

namespace ontosem {

namespace {

constexpr std::string_view kActivity = "Activity";
constexpr std::string_view kMeasure = "Measure";
// Placeholder carrying the type a copular noun complement demands of the
// subject. Dropped once unification has consumed it.
constexpr std::string_view kBeMarker = "BE";

struct Arg {
  std::string ref;  // variable id or constant label
  bool isNumber = false;
  std::int64_t number = 0;
  std::optional<AnnotatedType> demand;
  bool bridgeable = true;
};

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { Quant, Pred, And, Or, Implies, Bottom };
  Kind kind = Kind::And;
  std::string var;   // Quant
  std::string name;  // Pred
  Tag tag = Tag::None;
  std::vector<Arg> args;
  std::vector<NodePtr> kids;  // Quant body, connective children
};

NodePtr makeNode(Node::Kind kind) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  return n;
}

NodePtr makePred(std::string name, std::vector<Arg> args,
                 Tag tag = Tag::None) {
  auto n = makeNode(Node::Kind::Pred);
  n->name = std::move(name);
  n->args = std::move(args);
  n->tag = tag;
  return n;
}

NodePtr makeGroup(Node::Kind kind, std::vector<NodePtr> kids) {
  auto n = makeNode(kind);
  n->kids = std::move(kids);
  return n;
}

NodePtr makeQuant(std::string var, NodePtr body) {
  auto n = makeNode(Node::Kind::Quant);
  n->var = std::move(var);
  n->kids.push_back(std::move(body));
  return n;
}

Arg use(const std::string& id, std::optional<AnnotatedType> demand = {},
        bool bridgeable = true) {
  Arg a;
  a.ref = id;
  a.demand = std::move(demand);
  a.bridgeable = bridgeable;
  return a;
}

Arg num(std::int64_t v) {
  Arg a;
  a.isNumber = true;
  a.number = v;
  return a;
}

struct VarInfo {
  Quantifier quantifier = Quantifier::Exists;
  AnnotatedType type;
  bool constant = false;
};

struct Scope {
  std::vector<std::string> binders;
  std::vector<NodePtr> conjuncts;
};

std::vector<NodePtr> moveAll(std::vector<NodePtr>& v) {
  std::vector<NodePtr> out;
  for (auto& n : v) out.push_back(std::move(n));
  v.clear();
  return out;
}

NodePtr chain(const std::vector<std::string>& binders, NodePtr body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
    body = makeQuant(*it, std::move(body));
  }
  return body;
}

class Builder {
 public:
  Builder(const Ontology& onto, const Lexicon& lex) : onto_(onto), lex_(lex) {}

  Interpretation run(const ParseTree& tree) {
    NodePtr root;
    if (const auto* c = std::get_if<Copular>(&tree)) {
      root = copular(*c);
    } else if (const auto* t = std::get_if<Transitive>(&tree)) {
      root = transitive(*t);
    } else {
      root = pronoun(std::get<PronounClause>(tree));
    }
    resolve(root);
    Formula f = simplify(toFormula(*root));
    if (f.isBottom()) {
      fail("no reading survives", lastFail_);
    }
    for (const auto& sub : subformulas(f)) {
      if (sub.kind() == Formula::Kind::Quant && sub.binder().type &&
          sub.binder().type->existence != ExistenceMark::Plain) {
        trace_.add(TraceEvent::Kind::Expand,
                   {sub.binder().name,
                    std::string(format(sub.binder().type->existence))});
      }
    }
    return Interpretation{expandExistence(f), trace_};
  }

 private:
  [[noreturn]] void fail(const std::string& why,
                         std::optional<std::pair<std::string, std::string>> p) {
    std::string msg = why;
    if (p) msg += ": " + p->first + " with " + p->second;
    throw InterpretationFailure(msg, trace_, std::move(p));
  }

  [[noreturn]] void unifyFail(const AnnotatedType& a, const AnnotatedType& b) {
    trace_.add(TraceEvent::Kind::UnifyFail, {format(a), format(b)});
    fail("cannot unify", std::make_pair(format(a), format(b)));
  }

  std::string freshVar() {
    static constexpr std::string_view letters = "xyzwvutsrqponmlkjihgfedcba";
    while (true) {
      const std::size_t i = nextName_++;
      std::string name(1, letters[i % letters.size()]);
      if (i >= letters.size()) name += std::to_string(i / letters.size());
      if (!vars_.count(name)) return name;
    }
  }

  std::string addVar(Quantifier q, AnnotatedType t, Scope& scope) {
    std::string id = freshVar();
    vars_[id] = VarInfo{q, std::move(t), false};
    scope.binders.push_back(id);
    return id;
  }

  std::string addConst(const std::string& label, AnnotatedType t,
                       Scope& scope) {
    if (vars_.count(label)) return label;
    vars_[label] = VarInfo{Quantifier::ExistsUnique, std::move(t), true};
    scope.binders.push_back(label);
    return label;
  }

  const AnnotatedType& typeOf(const std::string& id) const {
    return vars_.at(id).type;
  }

  // --- lexical recipes ----------------------------------------------------

  const Signature& firstSignature(const std::string& name,
                                  std::size_t arity) const {
    for (const Signature* s : onto_.signaturesNamed(name)) {
      if (s->arity() == arity) return *s;
    }
    throw Error(ErrorCode::UnknownSignature,
                "no " + std::to_string(arity) + "-place signature for '" +
                    name + "'");
  }

  // Role relation linking an Activity to the holder of a deverbal noun.
  const Signature& roleSignature(const DeverbalNoun& dv) const {
    for (const Signature* s : onto_.signaturesNamed(dv.role)) {
      if (s->arity() == 2 && onto_.subsumes(kActivity, s->args[0].base)) {
        return *s;
      }
    }
    throw Error(ErrorCode::UnknownSignature, "no role '" + dv.role + "'");
  }

  const Adjective& adjective(const std::string& word) const {
    const Adjective* a = lex_.find<Adjective>(word);
    if (!a) {
      throw Error(ErrorCode::UnknownAdjective,
                  "'" + word + "' is not an adjective");
    }
    return *a;
  }

  void checkOrder(const std::vector<std::string>& adjs) {
    std::vector<AdjectiveUse> uses;
    for (const auto& w : adjs) uses.push_back({w, adjective(w).appliesTo});
    if (auto v = checkAdjOrder(onto_, uses, &trace_)) {
      fail("adjective order violation at '" + v->adjective + "'",
           std::make_pair(v->from, v->to));
    }
  }

  // Adjectives on a type noun demand their declared type of the variable,
  // with no bridge allowed.
  void typeNounAdjectives(const std::string& v,
                          const std::vector<std::string>& adjs, Scope& scope) {
    checkOrder(adjs);
    for (auto it = adjs.rbegin(); it != adjs.rend(); ++it) {
      const Adjective& a = adjective(*it);
      const Signature& sig = firstSignature(a.pred, 1);
      scope.conjuncts.push_back(
          makePred(a.pred, {use(v, sig.args[0], /*bridgeable=*/false)}));
    }
  }

  // Applies an adjective chain innermost-out to one variable. Each step must
  // cast upward; the first that cannot turns the whole reading into bottom.
  NodePtr castChain(const std::string& v, std::string type,
                    const std::vector<std::string>& adjs) {
    std::vector<NodePtr> preds;
    for (auto it = adjs.rbegin(); it != adjs.rend(); ++it) {
      const Adjective& a = adjective(*it);
      if (!onto_.subsumes(type, a.appliesTo)) {
        trace_.add(TraceEvent::Kind::UnifyFail, {type, a.appliesTo});
        lastFail_ = std::make_pair(type, a.appliesTo);
        return makeNode(Node::Kind::Bottom);
      }
      trace_.add(TraceEvent::Kind::CastUp, {*it, type, a.appliesTo});
      preds.push_back(makePred(a.pred, {use(v)}));
      type = a.appliesTo;
    }
    return makeGroup(Node::Kind::And, std::move(preds));
  }

  // Deverbal noun said of v: the nominal predicate when there is nothing to
  // modify, otherwise the activity expansion with one disjunct per reading.
  void deverbal(const std::string& v, const std::string& head,
                const DeverbalNoun& dv, const std::vector<std::string>& adjs,
                Scope& scope) {
    const Signature& role = roleSignature(dv);
    const AnnotatedType& holder = role.args[1];
    if (adjs.empty()) {
      if (const Signature* nominal = onto_.property(toUpper(head))) {
        scope.conjuncts.push_back(
            makePred(nominal->name, {use(v, nominal->args[0])}));
        return;
      }
    } else {
      checkOrder(adjs);
    }
    const std::string a =
        addVar(Quantifier::Exists, AnnotatedType(std::string(kActivity)), scope);
    scope.conjuncts.push_back(makePred(dv.activity, {use(a)}));
    scope.conjuncts.push_back(makePred(role.name, {use(a), use(v, holder)}));
    if (adjs.empty()) return;
    const std::string holderType = onto_.subsumes(typeOf(v).base, holder.base)
                                       ? typeOf(v).base
                                       : holder.base;
    std::vector<NodePtr> readings;
    readings.push_back(castChain(a, std::string(kActivity), adjs));
    readings.push_back(castChain(v, holderType, adjs));
    scope.conjuncts.push_back(makeGroup(Node::Kind::Or, std::move(readings)));
  }

  Quantifier determinerQuantifier(NounPhrase::Kind k) const {
    switch (k) {
      case NounPhrase::Kind::Def: return Quantifier::ExistsUnique;
      case NounPhrase::Kind::Universal: return Quantifier::Forall;
      default: return Quantifier::Exists;
    }
  }

  // A noun phrase with a head noun. With `subject` set the noun is predicated
  // of that existing referent instead of introducing a new one.
  std::string nounHead(const NounPhrase& np, Scope& scope,
                       const std::string* owner,
                       const std::string* subject = nullptr) {
    const Quantifier q = determinerQuantifier(np.kind);
    std::string v;
    if (const auto* tn = lex_.find<TypeNoun>(np.head)) {
      if (subject) {
        v = *subject;
        scope.conjuncts.push_back(
            makePred(std::string(kBeMarker), {use(v, AnnotatedType(tn->type))}));
      } else {
        v = addVar(q, AnnotatedType(tn->type), scope);
      }
      typeNounAdjectives(v, np.adjs, scope);
    } else if (const auto* dv = lex_.find<DeverbalNoun>(np.head)) {
      v = subject ? *subject
                  : addVar(q, AnnotatedType(roleSignature(*dv).args[1].base),
                           scope);
      deverbal(v, np.head, *dv, np.adjs, scope);
    } else {
      throw Error(ErrorCode::UnknownWord, "'" + np.head + "' is not a noun");
    }
    if (np.compound) compoundModifier(v, *np.compound, q, scope);
    if (np.kind == NounPhrase::Kind::Possessive) {
      if (!owner) {
        throw Error(ErrorCode::UngrammaticalInput,
                    "possessive without an owner");
      }
      const Signature& own = firstSignature("OWN", 2);
      scope.conjuncts.push_back(
          makePred(own.name, {use(*owner, own.args[0]), use(v, own.args[1])}));
    }
    return v;
  }

  void compoundModifier(const std::string& v, const std::string& word,
                        Quantifier q, Scope& scope) {
    const auto* tn = lex_.find<TypeNoun>(word);
    if (!tn) {
      throw Error(ErrorCode::UngrammaticalInput,
                  "compound modifier '" + word + "' is not a type noun");
    }
    AnnotatedType mod(tn->type);
    auto link = salientLink(onto_, typeOf(v), mod);
    if (!link) unifyFail(typeOf(v), mod);
    const std::string m = addVar(q, mod, scope);
    trace_.add(TraceEvent::Kind::Bridge,
               {typeOf(v).base, mod.base, link->signature->name, m});
    scope.conjuncts.push_back(link->leftFirst
                                  ? makePred(link->signature->name, {use(v), use(m)})
                                  : makePred(link->signature->name, {use(m), use(v)}));
  }

  std::string introduce(const NounPhrase& np, Scope& scope,
                        const std::string* owner) {
    using K = NounPhrase::Kind;
    switch (np.kind) {
      case K::ProperName: {
        const ProperNoun* pn = lex_.find<ProperNoun>(np.label);
        trace_.add(TraceEvent::Kind::NameIntro, {np.label, np.label});
        AnnotatedType t{std::string(kRootType)};
        if (auto c = collapse(onto_, t, AnnotatedType(pn->type), &trace_)) {
          t = *c;
        }
        return addConst(np.label, t, scope);
      }
      case K::Speaker:
        return addConst(np.label,
                        AnnotatedType(onto_.contains("Human")
                                          ? "Human"
                                          : std::string(kRootType)),
                        scope);
      case K::Number: {
        const std::string x = addVar(Quantifier::ExistsUnique,
                                     AnnotatedType(std::string(kMeasure)), scope);
        scope.conjuncts.push_back(makePred("VALUE", {use(x), num(np.number)}));
        return x;
      }
      case K::Bare: {
        const auto* cc = lex_.find<CopularComplement>(np.label);
        const std::string x =
            addVar(Quantifier::ExistsUnique,
                   AnnotatedType(std::string(kindType(cc->kind))), scope);
        scope.conjuncts.push_back(makePred(cc->pred, {use(x)}));
        return x;
      }
      case K::Indef:
      case K::Def:
      case K::Universal:
      case K::Possessive:
        return nounHead(np, scope, owner);
      case K::Anaphor:
      case K::Coordinated:
      case K::Adjectival:
        break;
    }
    throw Error(ErrorCode::UngrammaticalInput, "unexpected noun phrase");
  }

  NodePtr verbPred(const std::string& verb, Tag tag, const std::string& subj,
                   const std::string& obj) {
    const Verb* vb = lex_.find<Verb>(verb);
    if (!vb) throw Error(ErrorCode::UnknownWord, "'" + verb + "' is not a verb");
    const Signature& sig = firstSignature(vb->relation, 2);
    // Let the modal rule see the demands before unification does.
    Formula p = lowerModal(
        Formula::pred(sig.name,
                      {Term::var("s", sig.args[0]), Term::var("o", sig.args[1])},
                      tag),
        nullptr);
    if (tag == Tag::Can) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (sig.args[i].existence == ExistenceMark::MustExist) {
          trace_.add(TraceEvent::Kind::Lower, {sig.name, i == 0 ? subj : obj});
        }
      }
    }
    return makePred(sig.name, {use(subj, p.args()[0].type),
                               use(obj, p.args()[1].type)},
                    tag);
  }

  // --- sentence shapes ------------------------------------------------------

  NodePtr transitive(const Transitive& t) {
    Scope s;
    const std::string subj = introduce(t.subject, s, nullptr);
    if (t.object.kind == NounPhrase::Kind::Anaphor) {
      throw Error(ErrorCode::UngrammaticalInput, "'it' has no antecedent");
    }
    const std::string obj = introduce(t.object, s, &subj);
    s.conjuncts.push_back(verbPred(t.verb, t.tag, subj, obj));
    if (t.next) {
      const std::string obj2 = t.next->object.kind == NounPhrase::Kind::Anaphor
                                   ? obj
                                   : introduce(t.next->object, s, &subj);
      s.conjuncts.push_back(verbPred(t.next->verb, t.next->tag, subj, obj2));
    }
    return chain(s.binders, makeGroup(Node::Kind::And, moveAll(s.conjuncts)));
  }

  NodePtr pronoun(const PronounClause& p) {
    if (!p.anchor) {
      throw Error(ErrorCode::MissingAnchor,
                  "pronoun '" + p.pronoun + "' needs an anchor type");
    }
    if (!onto_.contains(*p.anchor)) {
      throw Error(ErrorCode::UnknownType,
                  "unknown anchor type '" + *p.anchor + "'");
    }
    Scope s;
    const Multiplicity m =
        p.pronoun == "they" ? Multiplicity::Many : Multiplicity::One;
    AnnotatedType person(onto_.contains("Human") ? "Human"
                                                 : std::string(kRootType),
                         ExistenceMark::Plain, m);
    AnnotatedType anchor(*p.anchor);
    const std::string x = addVar(Quantifier::Exists, person, s);
    const UnifyOutcome u = unify(onto_, person, anchor);
    if (std::holds_alternative<Collapse>(u)) {
      vars_[x].type = *collapse(onto_, person, anchor, &trace_);
    } else if (const auto* b = std::get_if<Bridge>(&u)) {
      const std::string y = addVar(Quantifier::Exists, anchor, s);
      trace_.add(TraceEvent::Kind::Bridge,
                 {format(person), anchor.base, b->relation, y});
      s.conjuncts.push_back(b->leftFirst ? makePred(b->relation, {use(x), use(y)})
                                         : makePred(b->relation, {use(y), use(x)}));
    } else {
      unifyFail(person, anchor);
    }
    const std::string obj = introduce(p.object, s, &x);
    s.conjuncts.push_back(verbPred(p.verb, p.tag, x, obj));
    return chain(s.binders, makeGroup(Node::Kind::And, moveAll(s.conjuncts)));
  }

  // The relation a copula stands for between a holder and a reified
  // complement of type `kind`.
  void copularRelation(const std::string& subj,
                       const std::optional<std::string>& holder,
                       const std::string& y, const AnnotatedType& kind,
                       Scope& scope) {
    const AnnotatedType holderType =
        holder ? AnnotatedType(*holder) : typeOf(subj);
    auto link = salientLink(onto_, holderType, kind);
    if (!link) {
      if (holder) unifyFail(AnnotatedType(*holder), kind);
      unifyFail(typeOf(subj), kind);
    }
    const Signature& sig = *link->signature;
    const std::size_t subjPos = link->leftFirst ? 0 : 1;
    AnnotatedType demand = holder ? AnnotatedType(*holder) : sig.args[subjPos];
    std::vector<Arg> args(2);
    args[subjPos] = use(subj, demand);
    args[1 - subjPos] = use(y);
    scope.conjuncts.push_back(makePred(sig.name, std::move(args)));
  }

  NodePtr copular(const Copular& c) {
    Scope outer;
    Scope inner;
    bool generic = false;
    std::string subj;
    if (c.subject.kind == NounPhrase::Kind::Bare) {
      const auto* cc = lex_.find<CopularComplement>(c.subject.label);
      generic = cc->kind == ComplementKind::ActivityNoun;
      subj = addVar(generic ? Quantifier::Forall : Quantifier::ExistsUnique,
                    AnnotatedType(std::string(kindType(cc->kind))), outer);
      outer.conjuncts.push_back(makePred(cc->pred, {use(subj)}));
    } else {
      subj = introduce(c.subject, outer, nullptr);
    }
    Scope& target = generic ? inner : outer;
    const NounPhrase& comp = c.complement;
    using K = NounPhrase::Kind;
    switch (comp.kind) {
      case K::ProperName: {
        const std::string other = introduce(comp, target, nullptr);
        const UnifyOutcome u = unify(onto_, typeOf(subj), typeOf(other));
        if (std::holds_alternative<Collapse>(u)) {
          collapse(onto_, typeOf(subj), typeOf(other), &trace_);
          target.conjuncts.push_back(makePred("EQ", {use(subj), use(other)}));
        } else if (const auto* b = std::get_if<Bridge>(&u)) {
          trace_.add(TraceEvent::Kind::Bridge,
                     {typeOf(subj).base, typeOf(other).base, b->relation, other});
          target.conjuncts.push_back(
              b->leftFirst ? makePred(b->relation, {use(subj), use(other)})
                           : makePred(b->relation, {use(other), use(subj)}));
        } else {
          unifyFail(typeOf(subj), typeOf(other));
        }
        break;
      }
      case K::Number: {
        const AnnotatedType measure{std::string(kMeasure)};
        const std::string y = addVar(Quantifier::ExistsUnique, measure, target);
        target.conjuncts.push_back(makePred("VALUE", {use(y), num(comp.number)}));
        copularRelation(subj, std::nullopt, y, measure, target);
        break;
      }
      case K::Bare: {
        const auto* cc = lex_.find<CopularComplement>(comp.label);
        const AnnotatedType kind{std::string(kindType(cc->kind))};
        const std::string y = addVar(Quantifier::ExistsUnique, kind, target);
        target.conjuncts.push_back(makePred(cc->pred, {use(y)}));
        copularRelation(subj, cc->holder, y, kind, target);
        break;
      }
      case K::Indef:
      case K::Def:
      case K::Universal:
        nounHead(comp, target, nullptr, &subj);
        break;
      case K::Adjectival:
        // Predicated directly of the subject; no ordering applies.
        for (const auto& w : comp.adjs) {
          const Adjective& a = adjective(w);
          const Signature& sig = firstSignature(a.pred, 1);
          target.conjuncts.push_back(
              makePred(a.pred, {use(subj, sig.args[0], /*bridgeable=*/false)}));
        }
        break;
      default:
        throw Error(ErrorCode::UngrammaticalInput,
                    "unsupported copular complement");
    }
    if (!generic) {
      return chain(outer.binders,
                   makeGroup(Node::Kind::And, moveAll(outer.conjuncts)));
    }
    NodePtr consequent = chain(
        inner.binders, makeGroup(Node::Kind::And, moveAll(inner.conjuncts)));
    std::vector<NodePtr> parts;
    parts.push_back(makeGroup(Node::Kind::And, moveAll(outer.conjuncts)));
    parts.push_back(std::move(consequent));
    return chain(outer.binders,
                 makeGroup(Node::Kind::Implies, std::move(parts)));
  }

  // --- unification over the draft -----------------------------------------

  static void collectBinders(const Node& n, std::vector<std::string>& out) {
    if (n.kind == Node::Kind::Quant) out.push_back(n.var);
    for (const auto& k : n.kids) collectBinders(*k, out);
  }

  static void collectDemands(Node& n, const std::string& id,
                             std::vector<Arg*>& out) {
    for (auto& a : n.args) {
      if (!a.isNumber && a.ref == id && a.demand) out.push_back(&a);
    }
    for (auto& k : n.kids) collectDemands(*k, id, out);
  }

  static NodePtr* findQuant(NodePtr& slot, const std::string& id) {
    if (slot->kind == Node::Kind::Quant && slot->var == id) return &slot;
    for (auto& k : slot->kids) {
      if (NodePtr* hit = findQuant(k, id)) return hit;
    }
    return nullptr;
  }

  // Binds `nv` right after `source` and adds the linking conjuncts at the
  // first connective below the binder run; a conditional takes them in its
  // restrictor.
  void insertBridge(NodePtr& root, const std::string& source,
                    const std::string& nv, std::vector<NodePtr> links) {
    NodePtr* slot = findQuant(root, source);
    NodePtr& body = (*slot)->kids[0];
    body = makeQuant(nv, std::move(body));
    NodePtr* cur = &body;
    while ((*cur)->kind == Node::Kind::Quant) cur = &(*cur)->kids[0];
    if ((*cur)->kind == Node::Kind::Implies) cur = &(*cur)->kids[0];
    if ((*cur)->kind == Node::Kind::And) {
      for (auto& l : links) (*cur)->kids.push_back(std::move(l));
    } else {
      std::vector<NodePtr> kids;
      kids.push_back(std::move(*cur));
      for (auto& l : links) kids.push_back(std::move(l));
      *cur = makeGroup(Node::Kind::And, std::move(kids));
    }
  }

  void resolveVar(NodePtr& root, const std::string& id) {
    std::vector<Arg*> pending;
    collectDemands(*root, id, pending);
    if (pending.empty()) return;
    VarInfo& info = vars_[id];
    AnnotatedType cur = info.type;
    // Pass 1: every demand that collapses, until nothing changes.
    for (bool progress = true; progress;) {
      progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        if (auto c = collapse(onto_, cur, *(*it)->demand, &trace_)) {
          cur = *c;
          (*it)->demand.reset();
          it = pending.erase(it);
          progress = true;
        } else {
          ++it;
        }
      }
    }
    vars_[id].type = cur;
    // Pass 2: the rest split off, one new variable per compatible group.
    while (!pending.empty()) {
      std::vector<Arg*> group{pending.front()};
      AnnotatedType groupType = *pending.front()->demand;
      pending.erase(pending.begin());
      for (auto it = pending.begin(); it != pending.end();) {
        if (auto c = collapse(onto_, groupType, *(*it)->demand)) {
          groupType = *c;
          group.push_back(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
      const bool bridgeable = std::all_of(group.begin(), group.end(),
                                          [](Arg* a) { return a->bridgeable; });
      if (!bridgeable) unifyFail(cur, groupType);
      const Quantifier q = vars_[id].quantifier;
      const std::string nv = freshVar();
      std::vector<NodePtr> links;
      const SalientActivityEntry* acts = onto_.salientActivities(cur.base);
      if (acts && onto_.subsumes(groupType.base, kActivity)) {
        const SalientActivity& best = acts->activities.front();
        vars_[nv] = VarInfo{q, groupType, false};
        trace_.add(TraceEvent::Kind::ActivityBridge,
                   {cur.base, best.activity, best.role, nv});
        links.push_back(makePred(best.activity, {use(nv)}));
        links.push_back(makePred(best.role, {use(nv), use(id)}));
      } else {
        const UnifyOutcome u = unify(onto_, cur, groupType);
        const auto* b = std::get_if<Bridge>(&u);
        if (!b) unifyFail(cur, groupType);
        vars_[nv] = VarInfo{q, groupType, false};
        trace_.add(TraceEvent::Kind::Bridge,
                   {cur.base, groupType.base, b->relation, nv});
        links.push_back(b->leftFirst ? makePred(b->relation, {use(id), use(nv)})
                                     : makePred(b->relation, {use(nv), use(id)}));
      }
      insertBridge(root, id, nv, std::move(links));
      for (Arg* a : group) {
        a->ref = nv;
        a->demand.reset();
      }
    }
  }

  void resolve(NodePtr& root) {
    std::vector<std::string> binders;
    collectBinders(*root, binders);
    for (const auto& id : binders) resolveVar(root, id);
  }

  // --- output -----------------------------------------------------------------

  Term termOf(const Arg& a) const {
    if (a.isNumber) return Term::number(a.number);
    auto it = vars_.find(a.ref);
    if (it != vars_.end() && it->second.constant) return Term::constant(a.ref);
    return Term::var(a.ref);
  }

  Formula toFormula(const Node& n) const {
    switch (n.kind) {
      case Node::Kind::Quant: {
        const VarInfo& info = vars_.at(n.var);
        Term binder = info.constant ? Term::constant(n.var, info.type)
                                    : Term::var(n.var, info.type);
        return Formula::quant(info.quantifier, std::move(binder),
                              toFormula(*n.kids[0]));
      }
      case Node::Kind::Pred: {
        if (n.name == kBeMarker) return Formula::conj({});
        std::vector<Term> args;
        for (const auto& a : n.args) args.push_back(termOf(a));
        return Formula::pred(n.name, std::move(args), n.tag);
      }
      case Node::Kind::And:
      case Node::Kind::Or: {
        std::vector<Formula> kids;
        for (const auto& k : n.kids) kids.push_back(toFormula(*k));
        return n.kind == Node::Kind::And ? Formula::conj(std::move(kids))
                                         : Formula::disj(std::move(kids));
      }
      case Node::Kind::Implies:
        return Formula::implies(toFormula(*n.kids[0]), toFormula(*n.kids[1]));
      case Node::Kind::Bottom:
        return Formula::bottom();
    }
    return Formula::bottom();
  }

  const Ontology& onto_;
  const Lexicon& lex_;
  std::map<std::string, VarInfo> vars_;
  std::size_t nextName_ = 0;
  Trace trace_;
  std::optional<std::pair<std::string, std::string>> lastFail_;
};

// Splits a tree holding "A and B <noun>" into the two parallel trees.
std::optional<std::pair<ParseTree, ParseTree>> splitCoordination(
    const ParseTree& tree) {
  auto split = [](NounPhrase& np, bool second) {
    if (np.kind != NounPhrase::Kind::Coordinated) return false;
    np.kind = np.determiner;
    if (second) np.adjs = np.adjs2;
    np.adjs2.clear();
    return true;
  };
  ParseTree a = tree;
  ParseTree b = tree;
  bool found = false;
  auto visit = [&](auto pick) {
    found = split(pick(a), false) | found;
    split(pick(b), true);
  };
  if (std::holds_alternative<Copular>(tree)) {
    visit([](ParseTree& t) -> NounPhrase& { return std::get<Copular>(t).subject; });
    visit([](ParseTree& t) -> NounPhrase& {
      return std::get<Copular>(t).complement;
    });
  } else if (std::holds_alternative<Transitive>(tree)) {
    visit([](ParseTree& t) -> NounPhrase& {
      return std::get<Transitive>(t).subject;
    });
    visit([](ParseTree& t) -> NounPhrase& {
      return std::get<Transitive>(t).object;
    });
  } else {
    visit([](ParseTree& t) -> NounPhrase& {
      return std::get<PronounClause>(t).object;
    });
  }
  if (!found) return std::nullopt;
  return std::make_pair(std::move(a), std::move(b));
}

// Conjoins two parallel readings, sharing their leading proper-name binders.
Formula conjoinParallel(const Formula& f, const Formula& g) {
  if (f.kind() == Formula::Kind::Quant && g.kind() == Formula::Kind::Quant &&
      f.binder().kind == Term::Kind::Const && f.binder() == g.binder() &&
      f.quantifier() == g.quantifier()) {
    return Formula::quant(f.quantifier(), f.binder(),
                          conjoinParallel(f.body(), g.body()));
  }
  return simplify(Formula::conj({f, g}));
}

}  // namespace

Interpretation Interpreter::interpret(const ParseTree& tree) const {
  if (auto parts = splitCoordination(tree)) {
    Interpretation a = interpret(parts->first);
    Interpretation b = interpret(parts->second);
    Interpretation out{conjoinParallel(a.formula, b.formula), a.trace};
    out.trace.append(b.trace);
    return out;
  }
  return Builder(onto_, lex_).run(tree);
}

Interpretation Interpreter::interpret(std::string_view sentence,
                                      std::optional<std::string> anchor) const {
  return interpret(parse(lex_, sentence, std::move(anchor)));
}

// --- inference ----------------------------------------------------------------

namespace {

std::vector<Formula> conjuncts(const Formula& f) {
  if (f.kind() == Formula::Kind::And) {
    return {f.children().begin(), f.children().end()};
  }
  return {f};
}

using Binding = std::map<std::string, Term>;

bool matchConjuncts(const Ontology& onto, const std::vector<Formula>& pattern,
                    const std::vector<Formula>& facts,
                    const std::map<std::string, AnnotatedType>& universals,
                    const std::map<std::string, Term>& factBinders,
                    std::size_t i, std::vector<bool>& used, Binding& binding) {
  if (i == pattern.size()) return true;
  const Formula& p = pattern[i];
  for (std::size_t j = 0; j < facts.size(); ++j) {
    const Formula& f = facts[j];
    if (used[j] || f.kind() != Formula::Kind::Pred ||
        p.kind() != Formula::Kind::Pred || f.name() != p.name() ||
        f.tag() != p.tag() || f.args().size() != p.args().size()) {
      continue;
    }
    Binding trial = binding;
    bool ok = true;
    for (std::size_t k = 0; ok && k < p.args().size(); ++k) {
      const Term& pa = p.args()[k];
      const Term& fa = f.args()[k];
      auto u = universals.find(pa.name);
      if (pa.kind == Term::Kind::Var && u != universals.end()) {
        if (fa.kind == Term::Kind::Num) {
          ok = false;
          break;
        }
        auto fb = factBinders.find(fa.name);
        if (fb == factBinders.end() ||
            !onto.subsumes(fb->second.type->base, u->second.base)) {
          ok = false;
          break;
        }
        auto bound = trial.find(pa.name);
        if (bound == trial.end()) {
          trial.emplace(pa.name, Term::named(fa.name));
          trial[pa.name].kind = fa.kind;
        } else if (bound->second.name != fa.name) {
          ok = false;
        }
      } else {
        ok = pa == fa;
      }
    }
    if (!ok) continue;
    used[j] = true;
    if (matchConjuncts(onto, pattern, facts, universals, factBinders, i + 1,
                       used, trial)) {
      binding = std::move(trial);
      return true;
    }
    used[j] = false;
  }
  return false;
}

Formula substitute(const Formula& f, const Binding& binding,
                   const std::set<std::string>& avoid, std::size_t& fresh) {
  switch (f.kind()) {
    case Formula::Kind::Quant: {
      Term binder = f.binder();
      Binding inner = binding;
      inner.erase(binder.name);
      if (avoid.count(binder.name)) {
        std::string renamed;
        do {
          renamed = "v" + std::to_string(fresh++);
        } while (avoid.count(renamed));
        Term replacement = Term::var(renamed);
        inner[binder.name] = replacement;
        binder.name = renamed;
        binder.kind = Term::Kind::Var;
      }
      return Formula::quant(f.quantifier(), binder,
                            substitute(f.body(), inner, avoid, fresh));
    }
    case Formula::Kind::Pred:
    case Formula::Kind::Equal: {
      std::vector<Term> args;
      for (const auto& a : f.args()) {
        auto it = a.kind == Term::Kind::Num ? binding.end() : binding.find(a.name);
        args.push_back(it == binding.end() ? a : it->second);
      }
      if (f.kind() == Formula::Kind::Equal) {
        return Formula::equal(args[0], args[1]);
      }
      return Formula::pred(f.name(), std::move(args), f.tag());
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& c : f.children()) {
        kids.push_back(substitute(c, binding, avoid, fresh));
      }
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                            : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
      return Formula::implies(substitute(f.antecedent(), binding, avoid, fresh),
                              substitute(f.consequent(), binding, avoid, fresh));
    case Formula::Kind::Bottom:
      return f;
  }
  return f;
}

}  // namespace

std::optional<Interpretation> infer(const Ontology& onto,
                                    const Interpretation& universal,
                                    const Interpretation& fact) {
  std::map<std::string, AnnotatedType> universals;
  const Formula* u = &universal.formula;
  while (u->kind() == Formula::Kind::Quant &&
         u->quantifier() == Quantifier::Forall) {
    if (u->binder().type) universals[u->binder().name] = *u->binder().type;
    u = &u->body();
  }
  if (u->kind() != Formula::Kind::Implies || universals.empty()) {
    return std::nullopt;
  }
  const auto pattern = conjuncts(u->antecedent());
  if (pattern.empty()) return std::nullopt;

  std::vector<Formula> prefix;
  std::map<std::string, Term> factBinders;
  const Formula* f = &fact.formula;
  while (f->kind() == Formula::Kind::Quant &&
         f->quantifier() != Quantifier::Forall) {
    prefix.push_back(*f);
    factBinders[f->binder().name] = f->binder();
    f = &f->body();
  }
  const auto facts = conjuncts(*f);

  Binding binding;
  std::vector<bool> used(facts.size(), false);
  if (!matchConjuncts(onto, pattern, facts, universals, factBinders, 0, used,
                      binding)) {
    return std::nullopt;
  }
  // Every universal the conclusion mentions must be bound.
  for (const auto& name : freeNames(u->consequent())) {
    if (universals.count(name) && !binding.count(name)) return std::nullopt;
  }
  std::set<std::string> avoid;
  for (const auto& [name, term] : factBinders) avoid.insert(name);
  std::size_t fresh = 0;
  Formula conclusion = substitute(u->consequent(), binding, avoid, fresh);

  const auto used_names = freeNames(conclusion);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    const std::string& name = it->binder().name;
    if (std::find(used_names.begin(), used_names.end(), name) !=
        used_names.end()) {
      conclusion = Formula::quant(it->quantifier(), it->binder(), conclusion);
    }
  }
  Interpretation out{simplify(conclusion), {}};
  out.trace.append(universal.trace);
  out.trace.append(fact.trace);
  return out;
}

// --- type checking --------------------------------------------------------------

bool isBuiltinPredicate(std::string_view name) {
  return name == "Exist" || name == "EQ" || name == "VALUE" ||
         name == "NOO" || name == "Inst";
}

bool typeCheck(const Ontology& onto, const Formula& f, std::string* why) {
  std::map<std::string, std::string> types;
  std::function<bool(const Formula&)> walk = [&](const Formula& g) -> bool {
    switch (g.kind()) {
      case Formula::Kind::Quant: {
        const Term& b = g.binder();
        const std::string saved = types.count(b.name) ? types[b.name] : "";
        types[b.name] = b.type ? b.type->base : std::string(kRootType);
        const bool ok = walk(g.body());
        if (saved.empty()) types.erase(b.name); else types[b.name] = saved;
        return ok;
      }
      case Formula::Kind::Pred: {
        if (isBuiltinPredicate(g.name())) return true;
        for (const Signature* sig : onto.signaturesNamed(g.name())) {
          if (sig->arity() != g.args().size()) continue;
          bool fits = true;
          for (std::size_t i = 0; fits && i < sig->arity(); ++i) {
            const Term& a = g.args()[i];
            auto it = types.find(a.name);
            fits = a.kind != Term::Kind::Num && it != types.end() &&
                   onto.subsumes(it->second, sig->args[i].base);
          }
          if (fits) return true;
        }
        if (why) *why = "ill-typed predicate " + render(g);
        return false;
      }
      default:
        for (const auto& c : g.children()) {
          if (!walk(c)) return false;
        }
        return true;
    }
  };
  return walk(f);
}

}  // namespace ontosem
