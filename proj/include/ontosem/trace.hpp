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

#include <string>
#include <vector>

namespace ontosem {

// One step of a derivation. Argument meaning depends on the kind:
//   SubsumeLeft/Right  s, t           (left or right operand kept)
//   AnnotationMerge    in, in, out
//   Bridge             s, t, relation, new variable
//   ActivityBridge     host, activity, role, new variable
//   CastUp             adjective, from, to
//   OrderViolation     adjective, from, to
//   UnifyFail          s, t
//   NameIntro          constant, label
//   Expand             variable, mark
//   Lower              predicate, variable
struct TraceEvent {
  enum class Kind {
    SubsumeLeft,
    SubsumeRight,
    AnnotationMerge,
    Bridge,
    ActivityBridge,
    CastUp,
    OrderViolation,
    UnifyFail,
    NameIntro,
    Expand,
    Lower,
  };

  Kind kind;
  std::vector<std::string> args;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

std::string_view format(TraceEvent::Kind kind);
std::string render(const TraceEvent& event);

class Trace {
 public:
  void add(TraceEvent::Kind kind, std::vector<std::string> args) {
    events_.push_back(TraceEvent{kind, std::move(args)});
  }
  void append(const Trace& other) {
    events_.insert(events_.end(), other.events_.begin(), other.events_.end());
  }

  const std::vector<TraceEvent>& events() const { return events_; }
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }

  // One event per line.
  std::string render() const;

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace ontosem
