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

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ontosem/logic_form.hpp"
#include "ontosem/ontology.hpp"
#include "ontosem/trace.hpp"
#include "ontosem/types.hpp"

namespace ontosem {

struct Collapse {
  AnnotatedType type;
  friend bool operator==(const Collapse&, const Collapse&) = default;
};

struct Bridge {
  AnnotatedType keepLeft;
  AnnotatedType keepRight;
  std::string relation;
  // True when the relation's first declared argument is the left type.
  bool leftFirst = true;
  const Signature* signature = nullptr;

  friend bool operator==(const Bridge& a, const Bridge& b) {
    return a.keepLeft == b.keepLeft && a.keepRight == b.keepRight &&
           a.relation == b.relation && a.leftFirst == b.leftFirst;
  }
};

struct Fail {
  friend bool operator==(const Fail&, const Fail&) = default;
};

using UnifyOutcome = std::variant<Collapse, Bridge, Fail>;

// A declared relation linking two types in either direction.
struct SalientLink {
  const Signature* signature = nullptr;
  bool leftFirst = true;
};

// Looks up the most salient relation in both directions. When both exist
// the earlier declaration wins, so the answer does not depend on argument
// order.
std::optional<SalientLink> salientLink(const Ontology& onto,
                                       const AnnotatedType& a,
                                       const AnnotatedType& b);

// Collapse with merged annotations when one base subsumes the other.
std::optional<AnnotatedType> collapse(const Ontology& onto,
                                      const AnnotatedType& a,
                                      const AnnotatedType& b,
                                      Trace* trace = nullptr);

UnifyOutcome unify(const Ontology& onto, const AnnotatedType& a,
                   const AnnotatedType& b, Trace* trace = nullptr);

// "collapse Human", "bridge Book Content CONTAINS", "fail".
std::string format(const UnifyOutcome& outcome);

// Under a `can` tag every MustExist argument demand becomes NeedNotExist.
Formula lowerModal(const Formula& pred, Trace* trace = nullptr);

struct AdjectiveUse {
  std::string adjective;
  std::string appliesTo;
};

struct OrderViolation {
  std::string adjective;  // the outer adjective of the failing pair
  std::string inner;      // the adjective it was stacked on
  std::string from;       // type the inner adjective casts to
  std::string to;         // type the outer adjective demands

  friend bool operator==(const OrderViolation&,
                         const OrderViolation&) = default;
};

// Chain is in surface order, outermost first. Returns the first adjacent
// pair whose cast would go downward.
std::optional<OrderViolation> checkAdjOrder(const Ontology& onto,
                                            std::span<const AdjectiveUse> chain,
                                            Trace* trace = nullptr);

std::string format(const OrderViolation& v);

}  // namespace ontosem
