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

#include "ontosem/unification.hpp"

#include "ontosem/error.hpp"

namespace ontosem {

std::optional<SalientLink> salientLink(const Ontology& onto,
                                       const AnnotatedType& a,
                                       const AnnotatedType& b) {
  auto fwd = onto.mostSalient(a.base, a.multiplicity, b.base, b.multiplicity);
  auto rev = onto.mostSalient(b.base, b.multiplicity, a.base, a.multiplicity);
  if (fwd && rev) {
    if (rev->signature->declOrder < fwd->signature->declOrder) {
      return SalientLink{rev->signature, false};
    }
    return SalientLink{fwd->signature, true};
  }
  if (fwd) return SalientLink{fwd->signature, true};
  if (rev) return SalientLink{rev->signature, false};
  return std::nullopt;
}

std::optional<AnnotatedType> collapse(const Ontology& onto,
                                      const AnnotatedType& a,
                                      const AnnotatedType& b, Trace* trace) {
  std::string base;
  if (onto.subsumes(a.base, b.base)) {
    base = a.base;
    if (trace) trace->add(TraceEvent::Kind::SubsumeLeft, {a.base, b.base});
  } else if (onto.subsumes(b.base, a.base)) {
    base = b.base;
    if (trace) trace->add(TraceEvent::Kind::SubsumeRight, {a.base, b.base});
  } else {
    return std::nullopt;
  }
  AnnotatedType out(base, mergeExistence(a.existence, b.existence),
                    mergeMultiplicity(a.multiplicity, b.multiplicity));
  if (trace && (a.existence != b.existence ||
                a.multiplicity != b.multiplicity)) {
    trace->add(TraceEvent::Kind::AnnotationMerge,
               {format(a), format(b), format(out)});
  }
  return out;
}

UnifyOutcome unify(const Ontology& onto, const AnnotatedType& a,
                   const AnnotatedType& b, Trace* trace) {
  if (auto c = collapse(onto, a, b, trace)) return Collapse{*c};
  if (auto link = salientLink(onto, a, b)) {
    if (trace) {
      trace->add(TraceEvent::Kind::Bridge,
                 {a.base, b.base, link->signature->name});
    }
    return Bridge{a, b, link->signature->name, link->leftFirst,
                  link->signature};
  }
  if (trace) trace->add(TraceEvent::Kind::UnifyFail, {format(a), format(b)});
  return Fail{};
}

std::string format(const UnifyOutcome& outcome) {
  if (const auto* c = std::get_if<Collapse>(&outcome)) {
    return "collapse " + format(c->type);
  }
  if (const auto* b = std::get_if<Bridge>(&outcome)) {
    return "bridge " + format(b->keepLeft) + " " + format(b->keepRight) +
           " " + b->relation;
  }
  return "fail";
}

Formula lowerModal(const Formula& pred, Trace* trace) {
  if (pred.kind() != Formula::Kind::Pred || pred.tag() != Tag::Can) {
    return pred;
  }
  std::vector<Term> args(pred.args().begin(), pred.args().end());
  bool changed = false;
  for (auto& a : args) {
    if (a.type && a.type->existence == ExistenceMark::MustExist) {
      a.type->existence = ExistenceMark::NeedNotExist;
      changed = true;
      if (trace) trace->add(TraceEvent::Kind::Lower, {pred.name(), a.name});
    }
  }
  if (!changed) return pred;
  return Formula::pred(pred.name(), std::move(args), pred.tag());
}

std::optional<OrderViolation> checkAdjOrder(const Ontology& onto,
                                            std::span<const AdjectiveUse> chain,
                                            Trace* trace) {
  for (const auto& use : chain) {
    if (!onto.contains(use.appliesTo)) {
      throw Error(ErrorCode::UnknownAdjective,
                  "adjective '" + use.adjective + "' applies to unknown type '" +
                      use.appliesTo + "'");
    }
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& outer = chain[i];
    const auto& inner = chain[i + 1];
    if (!onto.subsumes(inner.appliesTo, outer.appliesTo)) {
      OrderViolation v{outer.adjective, inner.adjective, inner.appliesTo,
                       outer.appliesTo};
      if (trace) {
        trace->add(TraceEvent::Kind::OrderViolation,
                   {v.adjective, v.from, v.to});
      }
      return v;
    }
  }
  return std::nullopt;
}

std::string format(const OrderViolation& v) {
  return "violation " + v.adjective + " " + v.inner + ": " + v.from +
         " does not cast up to " + v.to;
}

}  // namespace ontosem
