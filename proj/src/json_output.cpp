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

#include "ontosem/json_output.hpp"

namespace ontosem {

using nlohmann::json;

namespace {

std::string existenceName(ExistenceMark m) {
  switch (m) {
    case ExistenceMark::MustExist: return "must-exist";
    case ExistenceMark::NeedNotExist: return "need-not-exist";
    default: return "plain";
  }
}

json typeJson(const AnnotatedType& t) {
  return json{{"base", t.base},
              {"existence", existenceName(t.existence)},
              {"multiplicity", std::string(format(t.multiplicity))}};
}

}  // namespace

json toJson(const Term& t) {
  json out;
  switch (t.kind) {
    case Term::Kind::Var:
      out = {{"kind", "var"}, {"id", t.name}};
      break;
    case Term::Kind::Const:
      out = {{"kind", "const"}, {"label", t.name}};
      break;
    case Term::Kind::Num:
      return json{{"kind", "num"}, {"value", t.value}};
  }
  if (t.type) out["type"] = typeJson(*t.type);
  return out;
}

json toJson(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return json{{"kind", "bottom"}};
    case Formula::Kind::Quant:
      return json{{"kind", "quant"},
                  {"quantifier", std::string(format(f.quantifier()))},
                  {"var", toJson(f.binder())},
                  {"body", toJson(f.body())}};
    case Formula::Kind::Pred: {
      json args = json::array();
      for (const auto& a : f.args()) args.push_back(toJson(a));
      json out{{"kind", "pred"}, {"name", f.name()}, {"args", args}};
      if (f.tag() != Tag::None) out["tag"] = std::string(format(f.tag()));
      return out;
    }
    case Formula::Kind::Equal:
      return json{{"kind", "equal"},
                  {"lhs", toJson(f.args()[0])},
                  {"rhs", toJson(f.args()[1])}};
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      json kids = json::array();
      for (const auto& c : f.children()) kids.push_back(toJson(c));
      return json{{"kind", f.kind() == Formula::Kind::And ? "and" : "or"},
                  {"children", kids}};
    }
    case Formula::Kind::Implies:
      return json{{"kind", "implies"},
                  {"antecedent", toJson(f.antecedent())},
                  {"consequent", toJson(f.consequent())}};
  }
  return json{};
}

json toJson(const Trace& trace) {
  json out = json::array();
  for (const auto& e : trace.events()) {
    out.push_back(json{{"event", std::string(format(e.kind))}, {"args", e.args}});
  }
  return out;
}

json toJson(const UnifyOutcome& outcome) {
  if (const auto* c = std::get_if<Collapse>(&outcome)) {
    return json{{"outcome", "collapse"}, {"type", typeJson(c->type)}};
  }
  if (const auto* b = std::get_if<Bridge>(&outcome)) {
    return json{{"outcome", "bridge"},
                {"left", typeJson(b->keepLeft)},
                {"right", typeJson(b->keepRight)},
                {"relation", b->relation},
                {"leftFirst", b->leftFirst}};
  }
  return json{{"outcome", "fail"}};
}

}  // namespace ontosem
