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

#include "ontosem/trace.hpp"

namespace ontosem {

std::string_view format(TraceEvent::Kind kind) {
  using K = TraceEvent::Kind;
  switch (kind) {
    case K::SubsumeLeft: return "subsume-left";
    case K::SubsumeRight: return "subsume-right";
    case K::AnnotationMerge: return "annotation-merge";
    case K::Bridge: return "bridge";
    case K::ActivityBridge: return "activity-bridge";
    case K::CastUp: return "cast-up";
    case K::OrderViolation: return "order-violation";
    case K::UnifyFail: return "unify-fail";
    case K::NameIntro: return "name-intro";
    case K::Expand: return "expand";
    case K::Lower: return "lower";
  }
  return "";
}

std::string render(const TraceEvent& event) {
  std::string out(format(event.kind));
  for (const auto& a : event.args) {
    out += ' ';
    out += a;
  }
  return out;
}

std::string Trace::render() const {
  std::string out;
  for (const auto& e : events_) {
    out += ontosem::render(e);
    out += '\n';
  }
  return out;
}

}  // namespace ontosem
