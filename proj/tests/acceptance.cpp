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

// Acceptance runner: one PASS/FAIL line per criterion. Pass the path of the
// ontosem executable to also drive the adjective-order check through the CLI.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <set>
#include <sys/wait.h>
#include <string>
#include <vector>

#include "ontosem/interpreter.hpp"
#include "ontosem/unification.hpp"
#include "support/common.hpp"
#include "support/golden.hpp"
#include "support/laws.hpp"
#include "support/oracles.hpp"

using namespace ontosem;
using namespace ontosem::testing;

namespace {

struct Criterion {
  std::string title;
  std::vector<std::string> problems = {};
  std::vector<std::string> details = {};

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

const Interpreter& engine() {
  static const Interpreter i(seed().ontology, seed().lexicon);
  return i;
}

Criterion goldenDerivationsMatch() {
  Criterion c{"golden derivations match their targets"};
  for (const auto& g : goldenDerivations()) {
    try {
      const auto out = engine().interpret(g.sentence, g.anchor);
      c.require(alphaEq(out.formula, parseFormula(g.target)),
                g.sentence + " gave " + render(out.formula));
    } catch (const Error& e) {
      c.require(false, g.sentence + ": " + e.what());
    }
  }
  return c;
}

Criterion measureIsNotRising() {
  Criterion c{"90 is rising fails and is not entailed"};
  try {
    engine().interpret("90 is rising");
    c.require(false, "90 is rising was interpreted");
  } catch (const InterpretationFailure& f) {
    c.require(f.pair() && f.pair()->first == "Measure" &&
                  f.pair()->second == "Process",
              "unexpected failing pair");
  }
  const auto value = engine().interpret("the temperature is 90").formula;
  const auto rising = engine().interpret("the temperature is rising").formula;
  const auto joined = simplify(Formula::quant(
      value.quantifier(), value.binder(),
      Formula::conj({value.body(), Formula::quant(rising.quantifier(),
                                                  rising.binder(),
                                                  rising.body())})));
  const auto target = parseFormula(kNinetyRising);
  for (const auto& sub : subformulas(joined)) {
    c.require(!alphaEq(sub, target), "conjunction contains " + render(sub));
  }
  return c;
}

Criterion exercisingMakesJonWise() {
  Criterion c{"modus ponens from exercising is wise"};
  const auto rule = engine().interpret("exercising is wise");
  const auto fact = engine().interpret("jon is exercising");
  c.require(alphaEq(rule.formula, parseFormula(kExercisingRule)),
            "rule is " + render(rule.formula));
  c.require(alphaEq(fact.formula, parseFormula(kExercisingFact)),
            "fact is " + render(fact.formula));
  const auto out = infer(seed().ontology, rule, fact);
  c.require(out.has_value(), "no conclusion");
  if (out) {
    c.require(alphaEq(out->formula, parseFormula(kJonIsWise)),
              "concluded " + render(out->formula));
  }
  return c;
}

Criterion salientRelations() {
  Criterion c{"most salient relation tables"};
  using M = Multiplicity;
  const auto& onto = seed().ontology;
  c.require(onto.msr("Human", M::One, "Car", M::One) == "DRIVE",
            "msr(Human, 1, Car, 1)");
  c.require(onto.msr("Human", M::Many, "Car", M::One) == "RIDE",
            "msr(Human, 1+, Car, 1)");
  const auto he = render(engine().interpret("he is really annoying me",
                                            std::string("Car")).formula);
  const auto they = render(engine().interpret("they are really annoying me",
                                              std::string("Car")).formula);
  c.require(he.find("(DRIVE ") != std::string::npos, "he: " + he);
  c.require(they.find("(RIDE ") != std::string::npos, "they: " + they);
  const auto eat = bruteMsr(onto, "Human", M::One, "HamSandwich", M::One);
  c.require(eat == "EAT", "brute-force msr(Human, HamSandwich)");
  c.require(onto.msr("Human", M::One, "HamSandwich", M::One) == eat,
            "msr(Human, HamSandwich)");
  const auto madeOf = bruteMsr(onto, "House", M::One, "Brick", M::One);
  c.require(madeOf == "MADE-OF", "brute-force msr(House, Brick)");
  c.require(onto.msr("House", M::One, "Brick", M::One) == madeOf,
            "msr(House, Brick)");
  return c;
}

Criterion propertySuites() {
  Criterion c{"randomized property suites"};
  for (const auto& r : runAllLaws(seed())) {
    c.require(r.cases >= kDefaultCases,
              r.name + " ran only " + std::to_string(r.cases) + " cases");
    c.require(r.failures == 0, r.name + ": " + std::to_string(r.failures) +
                                   " failures, first " + r.counterexample);
    c.details.push_back((r.ok() ? "ok   " : "FAIL ") + r.name + " (" +
                        std::to_string(r.cases) + " cases)");
  }
  return c;
}

std::pair<int, std::string> runCommand(const std::string& cmd) {
  std::array<char, 256> buf{};
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return {-1, ""};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Criterion adjectiveOrder(const std::string& cli) {
  Criterion c{"adjective order check"};
  const auto& onto = seed().ontology;
  auto chain = [](std::initializer_list<const char*> words) {
    std::vector<AdjectiveUse> out;
    for (const char* w : words) {
      out.push_back({w, seed().lexicon.find<Adjective>(w)->appliesTo});
    }
    return out;
  };
  c.require(checkAdjOrder(onto, chain({"red", "beautiful"})).has_value(),
            "red beautiful accepted");
  c.require(!checkAdjOrder(onto, chain({"beautiful", "red"})).has_value(),
            "beautiful red rejected");
  if (!cli.empty()) {
    const auto [badCode, badOut] = runCommand(cli + " check-order red beautiful");
    const auto [okCode, okOut] = runCommand(cli + " check-order beautiful red");
    c.require(badCode == 1 && badOut.find("violation") != std::string::npos,
              "cli red beautiful: " + badOut);
    c.require(okCode == 0 && okOut.find("ok") != std::string::npos,
              "cli beautiful red: " + okOut);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion (*)(const std::string&)> checks{
      [](const std::string&) { return goldenDerivationsMatch(); },
      [](const std::string&) { return measureIsNotRising(); },
      [](const std::string&) { return exercisingMakesJonWise(); },
      [](const std::string&) { return salientRelations(); },
      [](const std::string&) { return propertySuites(); },
      adjectiveOrder,
  };
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto r = checks[i](cli);
    const bool ok = r.problems.empty();
    failed += !ok;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL")
              << "  " << r.title << std::endl;
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    for (const auto& p : r.problems) std::cout << "    " << p << "\n";
  }
  std::cout << (checks.size() - failed) << "/" << checks.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
