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

// Hand-encoded target forms for the worked derivations. Variable names follow
// the derivations rather than the engine so comparisons exercise renaming.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontosem::testing {

struct Golden {
  std::string label;
  std::string sentence;
  std::string target;
  std::optional<std::string> anchor = std::nullopt;
};

inline const std::vector<Golden>& goldenDerivations() {
  static const std::vector<Golden> kGolden{
      {"proper name absorbs a deverbal property", "sheba is a teacher",
       "(exists1 (sheba :: Human) (TEACHER sheba))"},
      {"must-exist object adds an Exist conjunct", "jon fixed a computer",
       "(exists1 (jon :: Human) (exists (c :: Computer) "
       "(and (Exist c) (FIX[did] jon c))))"},
      {"modal turns the object into a universal conditional",
       "jon can fix a computer",
       "(exists1 (jon :: Human) (forall (c :: Computer) "
       "(implies (Exist c) (FIX[can] jon c))))"},
      {"double universal over snakes and trees", "any snake can climb any tree",
       "(forall (s :: Snake) (forall (t :: Tree) "
       "(implies (and (Exist s) (Exist t)) (CLIMB[can] s t))))"},
      {"beautiful dancer keeps both readings", "olga is a beautiful dancer",
       "(exists1 (olga :: Human) (exists (e :: Activity) (and (DANCING e) "
       "(AGENT e olga) (or (BEAUTIFUL e) (BEAUTIFUL olga)))))"},
      {"elderly teacher has a single reading", "olga is an elderly teacher",
       "(exists1 (olga :: Human) (exists (e :: Activity) (and (TEACHING e) "
       "(AGENT e olga) (ELDERLY olga))))"},
      {"stacked adjectives keep only the person reading",
       "olga is a beautiful young dancer",
       "(exists1 (olga :: Human) (exists (e :: Activity) (and (DANCING e) "
       "(AGENT e olga) (YOUNG olga) (BEAUTIFUL olga))))"},
      {"painted a dog asserts no existence", "jon painted a dog",
       "(exists1 (jon :: Human) (exists (d :: Dog) (PAINT[did] jon d)))"},
      {"painted his dog asserts existence", "jon painted his dog",
       "(exists1 (jon :: Human) (exists (d :: Dog) "
       "(and (Exist d) (OWN jon d) (PAINT[did] jon d))))"},
      {"planned a trip stays abstract", "jon planned a trip",
       "(exists1 (jon :: Human) (exists (e :: Trip) (PLAN[did] jon e)))"},
      {"lengthy trip must exist", "jon planned a lengthy trip",
       "(exists1 (jon :: Human) (exists (e :: Trip) "
       "(and (PLAN[did] jon e) (Exist e) (LENGTHY e))))"},
      {"read and burned splits book and content",
       "jon read a book and then he burned it",
       "(exists1 (jon :: Human) (exists (b :: Book) (exists (c :: Content) "
       "(and (CONTAINS b c) (READ[did] jon c) (BURN[did] jon b)))))"},
      {"ham sandwich stands for its eater", "the ham sandwich wants a beer",
       "(exists1 (x :: HamSandwich) (exists1 (z :: Human) (exists (y :: Beer) "
       "(and (EAT z x) (WANT[does] z y)))))"},
      {"singular pronoun anchored to a car drives it",
       "he is really annoying me",
       "(exists (x :: Human) (exists (c :: Car) (exists1 (me :: Human) "
       "(and (DRIVE x c) (ANNOY[does] x me)))))",
       "Car"},
      {"plural pronoun anchored to a car rides it",
       "they are really annoying me",
       "(exists (x :: Human[1+]) (exists (c :: Car) (exists1 (me :: Human) "
       "(and (RIDE x c) (ANNOY[does] x me)))))",
       "Car"},
      {"identity between two names", "whb is btk",
       "(exists1 (whb :: Human) (exists1 (btk :: Human) (EQ whb btk)))"},
      {"property complement", "liz is famous",
       "(exists1 (liz :: Human) (exists1 (p :: Property) "
       "(and (FAME p) (HAS liz p))))"},
      {"process has a property", "aging is inevitable",
       "(exists1 (x :: Process) (exists1 (y :: Property) "
       "(and (AGING x) (INEVITABILITY y) (HAS x y))))"},
      {"property has a property", "fame is desirable",
       "(exists1 (x :: Property) (exists1 (y :: Property) "
       "(and (FAME x) (DESIRABILITY y) (HAS x y))))"},
      {"state complement", "sheba is dead",
       "(exists1 (sheba :: Human) (exists1 (y :: State) "
       "(and (DEATH y) (IN sheba y))))"},
      {"process complement", "jon is aging",
       "(exists1 (jon :: Human) (exists1 (y :: Process) "
       "(and (AGING y) (GT jon y))))"},
      {"temperature value", "the temperature is 90",
       "(exists1 (x :: Temperature) (exists1 (y :: Measure) "
       "(and (VALUE y 90) (HAS x y))))"},
      {"rising temperature", "the temperature is rising",
       "(exists1 (x :: Temperature) (exists1 (y :: Process) "
       "(and (RISING y) (GT x y))))"},
  };
  return kGolden;
}

inline const Golden& goldenNamed(const std::string& sentence) {
  for (const auto& g : goldenDerivations()) {
    if (g.sentence == sentence) return g;
  }
  throw std::out_of_range(sentence);
}

// Activity fact, generic rule and the conclusion drawn from both.
inline constexpr const char* kExercisingFact =
    "(exists1 (jon :: Human) (exists1 (e :: Activity) "
    "(and (EXERCISING e) (AGENT e jon))))";
inline constexpr const char* kExercisingRule =
    "(forall (a :: Activity) (forall (x :: Human) "
    "(implies (and (EXERCISING a) (AGENT a x)) "
    "(exists1 (p :: Property) (and (WISDOM p) (HAS x p))))))";
inline constexpr const char* kJonIsWise =
    "(exists1 (jon :: Human) (exists1 (p :: Property) "
    "(and (WISDOM p) (HAS jon p))))";

// Reading of "90 is rising" that must not follow from the temperature
// sentences.
inline constexpr const char* kNinetyRising =
    "(exists1 (y :: Measure) (and (VALUE y 90) (exists1 (z :: Process) "
    "(and (RISING z) (GT y z)))))";

}  // namespace ontosem::testing
