// Copyright 2026 The wadet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wadet/corpus.hpp"

#include <string>

#include "wadet/errors.hpp"

namespace wadet::corpus {

namespace {

const std::vector<std::string> kAb = {"a", "b"};

void require_positive(Weight k) {
  if (k < 1) throw PreconditionError("parameter must be at least 1");
}

}  // namespace

WeightedAutomaton make_fig1_left(Weight k) {
  require_positive(k);
  AutomatonBuilder b(kAb);
  b.add_state("si", true, false);
  b.add_state("s0");
  b.add_state("s1");
  b.add_state("s2", false, true);
  b.add_state("s3");
  for (const char* a : {"a", "b"}) {
    b.add_transition("si", a, -k, "s0");
    b.add_transition("si", a, k, "s1");
    b.add_transition("s2", a, 0, "s2");
    b.add_transition("s3", a, 0, "s3");
  }
  b.add_transition("s0", "a", k, "s2");
  b.add_transition("s0", "b", 0, "s3");
  b.add_transition("s1", "b", 1 - k, "s2");
  b.add_transition("s1", "a", 0, "s3");
  return b.build();
}

WeightedAutomaton make_fig1_right(Weight k) {
  require_positive(k);
  AutomatonBuilder b(kAb);
  b.add_state("qi", true, false);
  b.add_state("q");
  b.add_state("p", false, true);
  b.add_transition("qi", "a", 0, "q");
  b.add_transition("qi", "b", 0, "q");
  b.add_transition("q", "a", 0, "p");
  b.add_transition("q", "b", 1, "p");
  b.add_transition("p", "a", 0, "p");
  b.add_transition("p", "b", 0, "p");
  return b.build();
}

WeightedAutomaton make_fig2_left(Weight k) {
  require_positive(k);
  AutomatonBuilder b(kAb);
  b.add_state("si", true, false);
  b.add_state("s0", false, true);
  b.add_state("s1");
  b.add_state("s2", false, true);
  b.add_transition("si", "a", k, "s0");
  b.add_transition("si", "b", -k, "s0");
  b.add_transition("si", "a", -k, "s1");
  b.add_transition("si", "b", k, "s1");
  b.add_transition("s0", "a", 0, "s2");
  b.add_transition("s1", "b", 0, "s2");
  return b.build();
}

WeightedAutomaton make_fig2_right(Weight k) {
  require_positive(k);
  AutomatonBuilder b(kAb);
  b.add_state("ti", true, false);
  b.add_state("t0", false, true);
  b.add_state("t1", false, true);
  b.add_state("t2", false, true);
  b.add_transition("ti", "a", k, "t0");
  b.add_transition("ti", "b", -k, "t1");
  b.add_transition("t0", "a", 0, "t2");
  b.add_transition("t0", "b", -2 * k, "t2");
  b.add_transition("t1", "a", 0, "t2");
  b.add_transition("t1", "b", 2 * k, "t2");
  return b.build();
}

WeightedAutomaton make_fig3() {
  AutomatonBuilder b(kAb);
  b.add_state("si", true, false);
  b.add_state("s0");
  b.add_state("s1");
  b.add_state("s2", false, true);
  b.add_state("s3", false, true);
  b.add_transition("si", "a", 0, "s0");
  b.add_transition("si", "a", 0, "s1");
  b.add_transition("s0", "a", 1, "s2");
  b.add_transition("s1", "a", 0, "s3");
  b.add_transition("s1", "b", 0, "s3");
  return b.build();
}

WeightedAutomaton make_jpair(unsigned n) {
  if (n < 1) throw PreconditionError("parameter must be at least 1");
  std::vector<std::string> alphabet;
  for (unsigned j = 1; j <= n; ++j) alphabet.push_back(std::to_string(j));
  AutomatonBuilder b(alphabet);
  const StateId main = b.add_state("main", true, true);
  for (SymbolId a = 0; a < n; ++a) b.add_transition(main, a, -1, main);
  for (SymbolId j = 0; j < n; ++j) {
    const std::string tag = alphabet[j];
    const StateId init = b.add_state("init" + tag, true, false);
    const StateId mid = b.add_state("mid" + tag);
    const StateId fin = b.add_state("final" + tag, false, true);
    for (SymbolId a = 0; a < n; ++a) {
      if (a != j) b.add_transition(init, a, 0, init);
      if (a < j) b.add_transition(mid, a, 0, mid);
      if (a > j) b.add_transition(mid, a, 0, init);
      b.add_transition(fin, a, 0, fin);
    }
    b.add_transition(init, j, 0, mid);
    b.add_transition(mid, j, 0, fin);
  }
  return b.build();
}

Word word_without_jpair(unsigned n) {
  if (n < 1) throw PreconditionError("parameter must be at least 1");
  Word w{0};
  for (SymbolId i = 1; i < n; ++i) {
    Word next = w;
    next.push_back(i);
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  return w;
}

bool has_jpair(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t k = i + 1; k < w.size(); ++k) {
      if (w[k] == w[i]) return true;
      if (w[k] > w[i]) break;
    }
  }
  return false;
}

WeightedAutomaton make_quadregret(unsigned k) {
  if (k < 1) throw PreconditionError("parameter must be at least 1");
  AutomatonBuilder b(kAb);
  std::vector<StateId> p, q;
  for (unsigned i = 1; i <= k + 1; ++i) {
    p.push_back(b.add_state("p" + std::to_string(i), i == 1, true));
  }
  for (unsigned i = 1; i <= k + 1; ++i) {
    q.push_back(b.add_state("q" + std::to_string(i), i == 1, true));
  }
  const StateId sink = b.add_state("bot");
  const SymbolId a = 0, bb = 1;
  for (unsigned i = 0; i <= k; ++i) {
    b.add_transition(p[i], a, i < k ? 1 : 0, i < k ? p[i + 1] : sink);
    b.add_transition(p[i], bb, 0, p[0]);
    if (i < k) {
      b.add_transition(q[i], a, 0, q[i]);
      b.add_transition(q[i], bb, 0, q[i + 1]);
    } else {
      b.add_transition(q[i], a, 1, q[i]);
      b.add_transition(q[i], bb, 1, q[i]);
    }
  }
  b.add_transition(sink, a, 0, sink);
  b.add_transition(sink, bb, 0, sink);
  return b.build();
}

WeightedAutomaton make_maxab() {
  AutomatonBuilder b(kAb);
  b.add_state("count_a", true, true);
  b.add_state("count_b", true, true);
  b.add_transition("count_a", "a", 1, "count_a");
  b.add_transition("count_a", "b", 0, "count_a");
  b.add_transition("count_b", "a", 0, "count_b");
  b.add_transition("count_b", "b", 1, "count_b");
  return b.build();
}

EgrArena make_egr_example() {
  return EgrArena({"v0", "v1", "v2"}, {Owner::kEve, Owner::kAdam, Owner::kEve},
                  {Edge{0, 1, 1, false}, Edge{1, 0, -1, false},
                   Edge{1, 2, 0, true}, Edge{2, 0, -2, false}});
}

}  // namespace wadet::corpus
