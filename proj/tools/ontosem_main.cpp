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

// Command-line front end: interpret sentences, query the ontology, and run
// expectation corpora.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ontosem/error.hpp"
#include "ontosem/interpreter.hpp"
#include "ontosem/json_output.hpp"
#include "ontosem/lexicon.hpp"
#include "ontosem/ontology.hpp"
#include "ontosem/parser.hpp"
#include "ontosem/seed.hpp"
#include "ontosem/unification.hpp"

namespace {

using namespace ontosem;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInterpretationFailed = 2;
constexpr int kInputError = 3;
constexpr int kUsage = 64;

struct RunConfig {
  std::string ontologyPath;
  std::string lexiconPath;
  std::optional<std::string> anchorType;
  bool traceEnabled = false;
  std::string outputFormat = "canonical";
};

Knowledge load(const RunConfig& cfg) {
  const char* env = std::getenv("ONTOSEM_SEED");
  const bool forceSeed = env != nullptr && std::string(env) == "1";
  Knowledge k = loadSeed();
  if (!forceSeed && !cfg.ontologyPath.empty()) {
    k.ontology = loadOntologyFile(cfg.ontologyPath);
  }
  if (!forceSeed && !cfg.lexiconPath.empty()) {
    k.lexicon = loadLexiconFile(cfg.lexiconPath, k.ontology);
  } else if (!forceSeed && !cfg.ontologyPath.empty()) {
    k.lexicon = parseLexicon(seedLexiconText(), k.ontology);
  }
  if (cfg.anchorType && !k.ontology.contains(*cfg.anchorType)) {
    throw Error(ErrorCode::UnknownType,
                "unknown anchor type '" + *cfg.anchorType + "'");
  }
  return k;
}

void printFailure(const InterpretationFailure& e) {
  std::cout << "#bottom\n";
  if (e.pair()) {
    std::cout << "failed: " << e.pair()->first << " with " << e.pair()->second
              << "\n";
  } else {
    std::cout << "failed: " << e.what() << "\n";
  }
}

int interpretCmd(const RunConfig& cfg, const std::string& sentence) {
  Knowledge k = load(cfg);
  Interpreter interp(k.ontology, k.lexicon);
  try {
    Interpretation r = interp.interpret(sentence, cfg.anchorType);
    if (cfg.outputFormat == "json") {
      nlohmann::json out{{"canonical", render(r.formula)},
                         {"formula", toJson(r.formula)}};
      if (cfg.traceEnabled) out["trace"] = toJson(r.trace);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << render(r.formula) << "\n";
    }
    if (cfg.traceEnabled) std::cerr << r.trace.render();
    return kOk;
  } catch (const InterpretationFailure& e) {
    printFailure(e);
    if (cfg.traceEnabled) std::cerr << e.trace().render();
    return kInterpretationFailed;
  }
}

int unifyCmd(const RunConfig& cfg, const std::string& a, const std::string& b) {
  Knowledge k = load(cfg);
  Trace trace;
  UnifyOutcome u =
      unify(k.ontology, parseAnnotatedType(a), parseAnnotatedType(b), &trace);
  if (cfg.outputFormat == "json") {
    std::cout << toJson(u).dump(2) << "\n";
  } else {
    std::cout << format(u) << "\n";
  }
  if (cfg.traceEnabled) std::cerr << trace.render();
  return kOk;
}

int msrCmd(const RunConfig& cfg, const std::string& a, const std::string& b) {
  Knowledge k = load(cfg);
  AnnotatedType s = parseAnnotatedType(a);
  AnnotatedType t = parseAnnotatedType(b);
  auto r = k.ontology.msr(s.base, s.multiplicity, t.base, t.multiplicity);
  std::cout << r.value_or("none") << "\n";
  return kOk;
}

int checkOrderCmd(const RunConfig& cfg, const std::vector<std::string>& adjs) {
  Knowledge k = load(cfg);
  std::vector<AdjectiveUse> chain;
  for (const auto& w : adjs) {
    const Adjective* a = k.lexicon.find<Adjective>(w);
    if (!a) {
      throw Error(ErrorCode::UnknownAdjective,
                  "'" + w + "' is not an adjective");
    }
    chain.push_back({w, a->appliesTo});
  }
  if (auto v = checkAdjOrder(k.ontology, chain)) {
    std::cout << format(*v) << "\n";
    return kCheckFailed;
  }
  std::cout << "ok\n";
  return kOk;
}

int inferCmd(const RunConfig& cfg, const std::string& universal,
             const std::string& fact) {
  Knowledge k = load(cfg);
  Interpreter interp(k.ontology, k.lexicon);
  try {
    auto u = interp.interpret(universal);
    auto f = interp.interpret(fact, cfg.anchorType);
    auto r = infer(k.ontology, u, f);
    if (!r) {
      std::cout << "none\n";
    } else if (cfg.outputFormat == "json") {
      std::cout << nlohmann::json{{"canonical", render(r->formula)},
                                  {"formula", toJson(r->formula)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << render(r->formula) << "\n";
    }
    return kOk;
  } catch (const InterpretationFailure& e) {
    printFailure(e);
    return kInterpretationFailed;
  }
}

// Lines: sentence TAB expected [TAB anchor]. An expected value of #bottom
// asks for an interpretation failure.
int corpusCmd(const RunConfig& cfg, const std::string& path) {
  Knowledge k = load(cfg);
  Interpreter interp(k.ontology, k.lexicon);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Syntax, "cannot open corpus '" + path + "'");
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, '\t');) cols.push_back(col);
    if (cols.size() < 2) {
      std::cout << "FAIL line " << lineNo << ": expected two columns\n";
      ++failed;
      continue;
    }
    std::optional<std::string> anchor = cfg.anchorType;
    if (cols.size() >= 3 && !cols[2].empty()) anchor = cols[2];
    std::string got;
    try {
      got = render(interp.interpret(cols[0], anchor).formula);
    } catch (const InterpretationFailure&) {
      got = "#bottom";
    } catch (const Error& e) {
      got = std::string("error: ") + e.what();
    }
    bool ok;
    try {
      ok = alphaEq(parseFormula(got), parseFormula(cols[1]));
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      ++passed;
      std::cout << "PASS " << cols[0] << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << cols[0] << "\n  expected " << cols[1]
                << "\n  got      " << got << "\n";
    }
  }
  std::cout << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

int parseCmd(const RunConfig& cfg, const std::string& sentence) {
  Knowledge k = load(cfg);
  std::cout << describe(parse(k.lexicon, sentence, cfg.anchorType)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-grounded interpretation of a controlled English fragment"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--ontology", cfg.ontologyPath, "Ontology file (default: built-in seed)")
      ->check(CLI::ExistingFile);
  app.add_option("--lexicon", cfg.lexiconPath, "Lexicon file (default: built-in seed)")
      ->check(CLI::ExistingFile);
  app.add_option("--format", cfg.outputFormat, "Output format")
      ->check(CLI::IsMember({"canonical", "json"}));
  app.add_flag("--trace", cfg.traceEnabled, "Print the unification trace on stderr");
  std::string anchor;
  app.add_option("--anchor", anchor, "Type of the discourse referent for pronouns");

  std::string sentence;
  auto* interpret = app.add_subcommand("interpret", "Interpret one sentence");
  interpret->add_option("sentence", sentence)->required();
  interpret->add_option("--anchor", anchor, "Type of the discourse referent");
  interpret->add_flag("--trace", cfg.traceEnabled, "Print the trace on stderr");

  std::string left, right;
  auto* unifyApp = app.add_subcommand("unify", "Unify two annotated types");
  unifyApp->add_option("left", left)->required();
  unifyApp->add_option("right", right)->required();

  auto* msrApp = app.add_subcommand("msr", "Most salient relation between two types");
  msrApp->add_option("left", left)->required();
  msrApp->add_option("right", right)->required();

  std::vector<std::string> adjs;
  auto* order = app.add_subcommand("check-order", "Check an adjective sequence");
  order->add_option("adjectives", adjs)->required();

  std::string universal, fact;
  auto* inferApp = app.add_subcommand("infer", "Apply a universal sentence to a fact");
  inferApp->add_option("universal", universal)->required();
  inferApp->add_option("fact", fact)->required();

  std::string corpusPath;
  auto* corpus = app.add_subcommand("corpus", "Run a file of expectation pairs");
  corpus->add_option("file", corpusPath)->required()->check(CLI::ExistingFile);

  auto* parseApp = app.add_subcommand("parse", "Show the parse tree of a sentence");
  parseApp->add_option("sentence", sentence)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (!anchor.empty()) cfg.anchorType = anchor;

  try {
    if (*interpret) return interpretCmd(cfg, sentence);
    if (*unifyApp) return unifyCmd(cfg, left, right);
    if (*msrApp) return msrCmd(cfg, left, right);
    if (*order) return checkOrderCmd(cfg, adjs);
    if (*inferApp) return inferCmd(cfg, universal, fact);
    if (*corpus) return corpusCmd(cfg, corpusPath);
    if (*parseApp) return parseCmd(cfg, sentence);
  } catch (const Error& e) {
    std::cerr << "error (" << toString(e.code()) << "): " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}
