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

#include "wadet/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>

#include "wadet/core.hpp"

namespace wadet {

namespace {

struct KeyHash {
  static std::size_t mix(std::size_t h, std::uint64_t v) {
    return h ^ (std::hash<std::uint64_t>()(v) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
  std::size_t operator()(const SubsetState& s) const {
    std::size_t h = s.size();
    for (StateId q : s) h = mix(h, q);
    return h;
  }
  std::size_t operator()(const DelayFunctionState& s) const {
    std::size_t h = s.size();
    for (const DelayState& d : s) {
      h = mix(h, d.state);
      h = mix(h, static_cast<std::uint64_t>(d.delay));
    }
    return h;
  }
  std::size_t operator()(const BoundedDetState& s) const {
    std::size_t h = s.size();
    for (const auto& v : s) {
      h = mix(h, v ? static_cast<std::uint64_t>(*v) : 0x7fffULL);
      h = mix(h, v.has_value());
    }
    return h;
  }
};

// Worklist exploration shared by the subset-like constructions. expand(key,
// a, emit) calls emit(weight, successor key) for each outgoing transition.
template <class Key, class Expand, class NameFn, class FinalFn>
Labeled<Key> explore(const std::vector<std::string>& alphabet, Key init,
                     Expand expand, NameFn name, FinalFn is_final,
                     const Budget& budget) {
  std::unordered_map<Key, StateId, KeyHash> index;
  std::vector<Key> keys;
  std::vector<Transition> ts;
  std::deque<StateId> queue;
  auto intern = [&](Key k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    if (keys.size() >= budget.max_states) {
      throw BudgetExceeded("reachable state count exceeds " +
                           std::to_string(budget.max_states));
    }
    auto id = static_cast<StateId>(keys.size());
    index.emplace(k, id);
    keys.push_back(std::move(k));
    queue.push_back(id);
    return id;
  };
  intern(std::move(init));
  while (!queue.empty()) {
    StateId from = queue.front();
    queue.pop_front();
    for (SymbolId a = 0; a < alphabet.size(); ++a) {
      Key current = keys[from];
      expand(current, a, [&](Weight w, Key succ) {
        StateId to = intern(std::move(succ));
        ts.push_back(Transition{from, a, w, to});
      });
    }
  }
  std::vector<std::string> names;
  std::vector<StateId> fin;
  names.reserve(keys.size());
  for (StateId s = 0; s < keys.size(); ++s) {
    names.push_back(name(keys[s]));
    if (is_final(keys[s])) fin.push_back(s);
  }
  return Labeled<Key>{WeightedAutomaton(alphabet, std::move(names), {0},
                                        std::move(fin), std::move(ts)),
                      std::move(keys)};
}

std::string delay_state_name(const WeightedAutomaton& n, StateId q, Weight i) {
  return "(" + n.state_name(q) + "," + std::to_string(i) + ")";
}

}  // namespace

Labeled<SubsetState> pair_determinize_labeled(const WeightedAutomaton& n,
                                              const Budget& budget) {
  SubsetState init(n.initial().begin(), n.initial().end());
  auto expand = [&](const SubsetState& u, SymbolId a, auto emit) {
    std::map<Weight, SubsetState> buckets;
    for (StateId p : u) {
      for (const Transition& t : n.out(p, a)) buckets[t.weight].push_back(t.dst);
    }
    for (auto& [x, v] : buckets) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      emit(x, std::move(v));
    }
  };
  auto name = [&](const SubsetState& u) {
    std::string s = "{";
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i) s += ',';
      s += n.state_name(u[i]);
    }
    return s + "}";
  };
  auto is_final = [&](const SubsetState& u) {
    return std::any_of(u.begin(), u.end(),
                       [&](StateId q) { return n.is_final(q); });
  };
  return explore<SubsetState>(n.alphabet(), std::move(init), expand, name,
                              is_final, budget);
}

WeightedAutomaton pair_determinize(const WeightedAutomaton& n,
                                   const Budget& budget) {
  return pair_determinize_labeled(n, budget).automaton;
}

WeightedAutomaton delay_construct(const WeightedAutomaton& n, unsigned k) {
  const Weight kk = k;
  const StateId width = 2 * k + 1;
  auto id = [&](StateId q, Weight i) {
    return static_cast<StateId>(q * width + static_cast<StateId>(i + kk));
  };
  std::vector<std::string> names;
  std::vector<StateId> init, fin;
  for (StateId q = 0; q < n.num_states(); ++q) {
    for (Weight i = -kk; i <= kk; ++i) names.push_back(delay_state_name(n, q, i));
  }
  for (StateId q : n.initial()) init.push_back(id(q, 0));
  for (StateId q : n.final_states()) fin.push_back(id(q, 0));
  std::vector<Transition> ts;
  for (const Transition& t : n.transitions()) {
    for (Weight i = -kk; i <= kk; ++i) {
      for (Weight j = -kk; j <= kk; ++j) {
        ts.push_back(Transition{id(t.src, i), t.symbol,
                                checked_sub(checked_add(i, t.weight), j),
                                id(t.dst, j)});
      }
    }
  }
  return WeightedAutomaton(n.alphabet(), std::move(names), std::move(init),
                           std::move(fin), std::move(ts));
}

Labeled<DelayFunctionState> delay_subset_construct_labeled(
    const WeightedAutomaton& n, unsigned k, const Budget& budget) {
  const Weight kk = k;
  DelayFunctionState init;
  for (StateId q : n.initial()) init.push_back(DelayState{q, 0});
  auto expand = [&](const DelayFunctionState& u, SymbolId a, auto emit) {
    std::map<Weight, DelayFunctionState> buckets;
    for (const DelayState& d : u) {
      for (const Transition& t : n.out(d.state, a)) {
        Weight base = checked_add(d.delay, t.weight);
        for (Weight j = -kk; j <= kk; ++j) {
          buckets[base - j].push_back(DelayState{t.dst, j});
        }
      }
    }
    for (auto& [x, v] : buckets) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      emit(x, std::move(v));
    }
  };
  auto name = [&](const DelayFunctionState& u) {
    std::string s = "{";
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i) s += ',';
      s += delay_state_name(n, u[i].state, u[i].delay);
    }
    return s + "}";
  };
  auto is_final = [&](const DelayFunctionState& u) {
    return std::any_of(u.begin(), u.end(), [&](const DelayState& d) {
      return d.delay == 0 && n.is_final(d.state);
    });
  };
  return explore<DelayFunctionState>(n.alphabet(), std::move(init), expand,
                                     name, is_final, budget);
}

WeightedAutomaton delay_subset_construct(const WeightedAutomaton& n,
                                         unsigned k, const Budget& budget) {
  return delay_subset_construct_labeled(n, k, budget).automaton;
}

Labeled<BoundedDetState> bounded_determinize_labeled(const WeightedAutomaton& n,
                                                     Weight b,
                                                     const Budget& budget) {
  if (b < 0) throw PreconditionError("bound must be nonnegative");
  if (!is_trim(n)) throw PreconditionError("bounded_determinize needs a trim automaton");
  BoundedDetState init(n.num_states());
  for (StateId q : n.initial()) init[q] = 0;
  auto expand = [&](const BoundedDetState& g, SymbolId a, auto emit) {
    BoundedDetState m(n.num_states());
    for (StateId p = 0; p < n.num_states(); ++p) {
      if (!g[p]) continue;
      for (const Transition& t : n.out(p, a)) {
        Weight v = checked_add(*g[p], t.weight);
        if (!m[t.dst] || *m[t.dst] < v) m[t.dst] = v;
      }
    }
    std::optional<Weight> top;
    for (const auto& v : m) {
      if (v && (!top || *top < *v)) top = v;
    }
    if (!top) return;
    std::optional<Weight> out_final;
    for (StateId q = 0; q < n.num_states(); ++q) {
      if (!m[q]) continue;
      if (*top - *m[q] > b) {
        m[q].reset();
        continue;
      }
      if (n.is_final(q) && (!out_final || *out_final < *m[q])) out_final = m[q];
    }
    const Weight w = out_final ? *out_final : *top;
    for (auto& v : m) {
      if (v) v = *v - w;
    }
    emit(w, std::move(m));
  };
  auto name = [&](const BoundedDetState& g) {
    std::string s = "<";
    bool first = true;
    for (StateId q = 0; q < g.size(); ++q) {
      if (!g[q]) continue;
      if (!first) s += ',';
      first = false;
      s += n.state_name(q) + ":" + std::to_string(*g[q]);
    }
    return s + ">";
  };
  auto is_final = [&](const BoundedDetState& g) {
    for (StateId q = 0; q < g.size(); ++q) {
      if (g[q] && n.is_final(q)) return true;
    }
    return false;
  };
  return explore<BoundedDetState>(n.alphabet(), std::move(init), expand, name,
                                   is_final, budget);
}

WeightedAutomaton bounded_determinize(const WeightedAutomaton& n, Weight b,
                                      const Budget& budget) {
  return bounded_determinize_labeled(n, b, budget).automaton;
}

Weight range_bound(const WeightedAutomaton& n, Weight b) {
  return checked_add(checked_mul(3, b),
                     checked_mul(checked_mul(2, static_cast<Weight>(n.num_states())),
                                 max_weight(n)));
}

WeightedAutomaton range_bound_determinize(const WeightedAutomaton& n, Weight b,
                                          const Budget& budget) {
  return bounded_determinize(n, range_bound(n, b), budget);
}

WeightedAutomaton sum_product(const WeightedAutomaton& d1,
                              const WeightedAutomaton& d2) {
  if (!is_deterministic(d1) || !is_deterministic(d2)) {
    throw PreconditionError("sum_product needs deterministic automata");
  }
  if (d1.alphabet() != d2.alphabet()) throw InputError("alphabet mismatch");
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::deque<std::pair<StateId, StateId>> queue;
  std::vector<std::string> names;
  std::vector<StateId> fin;
  std::vector<Transition> ts;
  auto intern = [&](StateId p, StateId q) {
    auto [it, fresh] =
        index.emplace(std::make_pair(p, q), static_cast<StateId>(index.size()));
    if (fresh) {
      names.push_back("(" + d1.state_name(p) + "," + d2.state_name(q) + ")");
      if (d1.is_final(p) && d2.is_final(q)) fin.push_back(it->second);
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  intern(d1.initial().front(), d2.initial().front());
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    StateId from = index.at({p, q});
    for (SymbolId a = 0; a < d1.num_symbols(); ++a) {
      auto t1 = d1.out(p, a);
      auto t2 = d2.out(q, a);
      if (t1.empty() || t2.empty()) continue;
      StateId to = intern(t1.front().dst, t2.front().dst);
      ts.push_back(Transition{from, a, checked_add(t1.front().weight, t2.front().weight), to});
    }
  }
  return WeightedAutomaton(d1.alphabet(), std::move(names), {0}, std::move(fin),
                           std::move(ts));
}

WeightedAutomaton exactify(const WeightedAutomaton& n,
                           const WeightedAutomaton& d, Weight r,
                           std::size_t check_horizon, const Budget& budget) {
  if (!is_deterministic(d)) throw PreconditionError("exactify needs a deterministic D");
  if (r < 0) throw PreconditionError("r must be nonnegative");
  WeightedAutomaton m = trim(difference_product(n, d));
  for (const Word& w : all_words(n.num_symbols(), check_horizon)) {
    ExtendedWeight v = evaluate(m, w);
    if (!v.is_bottom() && (v.value() > r || v.value() < -r)) {
      throw PreconditionError("difference " + v.to_string() + " on word '" +
                              format_word(n.alphabet(), w) +
                              "' exceeds the range bound");
    }
  }
  WeightedAutomaton dm = range_bound_determinize(m, r, budget);
  return sum_product(d, dm);
}

}  // namespace wadet
