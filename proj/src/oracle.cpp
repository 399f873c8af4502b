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

#include "wadet/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wadet/core.hpp"
#include "wadet/deciders.hpp"

namespace wadet::oracle {

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

struct EnumRun {
  std::vector<StateId> states;
  std::vector<Weight> prefix;  // prefix[i] = sum of the first i weights
};

// Every run on w starting in an initial state (final or not), in DFS order.
// visit(run, depth) is called on each partial run, including length 0.
void enumerate_initial_runs(const WeightedAutomaton& n, const Word& w,
                            const Limits& limits,
                            const std::function<void(const EnumRun&)>& visit) {
  if (w.size() > limits.max_word_length) {
    throw LimitExceeded("word longer than the enumeration bound");
  }
  std::size_t count = 0;
  EnumRun run;
  std::function<void()> rec = [&]() {
    if (++count > limits.max_runs) throw LimitExceeded("run fan-out cap exceeded");
    visit(run);
    const std::size_t i = run.states.size() - 1;
    if (i == w.size()) return;
    const StateId p = run.states.back();
    for (const Transition& t : n.transitions()) {
      if (t.src != p || t.symbol != w[i]) continue;
      run.states.push_back(t.dst);
      run.prefix.push_back(checked_add(run.prefix.back(), t.weight));
      rec();
      run.states.pop_back();
      run.prefix.pop_back();
    }
  };
  for (StateId q : n.initial()) {
    run.states = {q};
    run.prefix = {0};
    rec();
  }
}

std::vector<EnumRun> accepting_runs(const WeightedAutomaton& n, const Word& w,
                                    const Limits& limits) {
  std::vector<EnumRun> out;
  enumerate_initial_runs(n, w, limits, [&](const EnumRun& r) {
    if (r.states.size() == w.size() + 1 && n.is_final(r.states.back())) {
      out.push_back(r);
    }
  });
  return out;
}

std::string run_text(const WeightedAutomaton& n, const std::vector<StateId>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += n.state_name(s[i]);
  }
  return out + "]";
}

Limits with_length(Limits l, std::size_t len) {
  l.max_word_length = std::max(l.max_word_length, len);
  return l;
}

}  // namespace

ExtendedWeight brute_value(const WeightedAutomaton& n, const Word& w,
                           const Limits& limits) {
  ExtendedWeight best;
  for (const EnumRun& r : accepting_runs(n, w, limits)) {
    best = max(best, ExtendedWeight(r.prefix.back()));
  }
  return best;
}

RegretOutcome brute_regret(const WeightedAutomaton& n, const MealyMachine& m,
                           std::size_t horizon, const Limits& limits) {
  RegretOutcome out;
  const Limits lim = with_length(limits, horizon);
  for (const Word& w : all_words(n.num_symbols(), horizon)) {
    ExtendedWeight v = brute_value(n, w, lim);
    if (v.is_bottom()) continue;
    std::vector<StateId> s = strategy_states(m, w);
    bool ok = s[0] < n.num_states() && n.is_initial(s[0]);
    Weight sum = 0;
    for (std::size_t i = 0; ok && i < w.size(); ++i) {
      auto t = ok && s[i + 1] < n.num_states() ? n.weight(s[i], w[i], s[i + 1])
                                               : std::nullopt;
      if (!t) {
        ok = false;
      } else {
        sum += *t;
      }
    }
    ok = ok && n.is_final(s.back());
    if (!ok) {
      if (!out.infinite) out.worst_word = w;
      out.infinite = true;
      continue;
    }
    ExtendedWeight regret(v.value() - sum);
    if (out.value < regret) {
      out.value = regret;
      if (!out.infinite) out.worst_word = w;
    }
  }
  return out;
}

std::optional<Weight> brute_min_delay(const WeightedAutomaton& d,
                                      const WeightedAutomaton& n,
                                      std::size_t horizon,
                                      const Limits& limits) {
  const Limits lim = with_length(limits, horizon);
  Weight result = 0;
  for (const Word& w : all_words(d.num_symbols(), horizon)) {
    std::vector<EnumRun> nd = accepting_runs(d, w, lim);
    if (nd.empty()) continue;
    std::vector<EnumRun> nn = accepting_runs(n, w, lim);
    for (const EnumRun& rd : nd) {
      std::optional<Weight> best;
      for (const EnumRun& rn : nn) {
        if (rn.prefix.back() != rd.prefix.back()) continue;
        Weight worst = 0;
        for (std::size_t i = 1; i < rd.prefix.size(); ++i) {
          Weight diff = rd.prefix[i] - rn.prefix[i];
          worst = std::max(worst, diff < 0 ? -diff : diff);
        }
        if (!best || worst < *best) best = worst;
      }
      if (!best) return std::nullopt;
      result = std::max(result, *best);
    }
  }
  return result;
}

std::vector<std::vector<bool>> brute_egr_table(const EgrArena& g, Weight c0,
                                               const EgrOracleOptions& opts) {
  const std::size_t n = g.num_vertices();
  const Weight cap = 2 * static_cast<Weight>(n) * g.max_weight() + 1;
  const Weight seed = std::min(c0, cap);
  std::vector<std::vector<bool>> win(n, std::vector<bool>(cap + 1, true));
  auto good = [&](const Edge& e, Weight c) {
    Weight next = (e.reset && !opts.ignore_resets) ? seed + e.weight : c + e.weight;
    return next >= 0 && win[e.dst][std::min(next, cap)];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      for (Weight c = 0; c <= cap; ++c) {
        if (!win[v][c]) continue;
        bool eve = g.is_eve(v);
        bool any = false, all = true;
        for (const Edge& e : g.edges()) {
          if (e.src != v) continue;
          bool ok = good(e, c);
          any = any || ok;
          all = all && ok;
        }
        if (!(eve ? any : all)) {
          win[v][c] = false;
          changed = true;
        }
      }
    }
  }
  return win;
}

bool brute_egr(const EgrArena& g, VertexId v, Weight c0,
               const EgrOracleOptions& opts) {
  std::vector<std::vector<bool>> win = brute_egr_table(g, c0, opts);
  const Weight cap = static_cast<Weight>(win.at(v).size()) - 1;
  return win[v][std::min(c0, cap)];
}

Player first_cycle_winner(const EgrArena& g, const std::vector<EdgeId>& lasso) {
  if (lasso.empty()) throw InputError("not a lasso: no edges");
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < lasso.size(); ++i) {
    if (lasso[i] >= g.num_edges()) throw InputError("not a lasso: unknown edge");
    const Edge& e = g.edge(lasso[i]);
    if (i == 0) vs.push_back(e.src);
    if (e.src != vs.back()) throw InputError("not a lasso: edges do not chain");
    vs.push_back(e.dst);
  }
  const std::size_t last = vs.size() - 1;
  for (std::size_t j = 0; j < last; ++j) {
    for (std::size_t k = j + 1; k < last; ++k) {
      if (vs[j] == vs[k]) throw InputError("not a lasso: prefix is not simple");
    }
  }
  auto it = std::find(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(last), vs[last]);
  if (it == vs.begin() + static_cast<std::ptrdiff_t>(last)) {
    throw InputError("not a lasso: the path does not close a cycle");
  }
  const std::size_t start = static_cast<std::size_t>(it - vs.begin());
  Weight sum = 0;
  for (std::size_t j = start; j < lasso.size(); ++j) {
    if (g.edge(lasso[j]).reset) return Player::kEve;
    sum += g.edge(lasso[j]).weight;
  }
  return sum >= 0 ? Player::kEve : Player::kAdam;
}

Player brute_first_cycle_game(const EgrArena& g, VertexId v) {
  std::vector<VertexId> path{v};
  std::vector<EdgeId> edges;
  std::function<Player()> solve = [&]() -> Player {
    const VertexId u = path.back();
    const Player mover = g.is_eve(u) ? Player::kEve : Player::kAdam;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e).src != u) continue;
      edges.push_back(e);
      Player outcome;
      const VertexId dst = g.edge(e).dst;
      if (std::find(path.begin(), path.end(), dst) != path.end()) {
        outcome = first_cycle_winner(g, edges);
      } else {
        path.push_back(dst);
        outcome = solve();
        path.pop_back();
      }
      edges.pop_back();
      if (outcome == mover) return mover;
    }
    return mover == Player::kEve ? Player::kAdam : Player::kEve;
  };
  return solve();
}

OracleReport check_strategy_plays(const EgrArena& g, const PositionalStrategy& s,
                                  VertexId v, Weight c0, std::size_t depth) {
  OracleReport rep;
  rep.check = "strategy-plays";
  rep.horizon = depth;
  const Weight cap = s.cap;
  std::vector<VertexId> play{v};
  std::function<bool(Weight, Weight)> rec = [&](Weight energy, Weight level) -> bool {
    if (energy < 0) return false;
    if (play.size() > depth) return true;
    const VertexId u = play.back();
    auto step = [&](EdgeId e) {
      const Edge& ed = g.edge(e);
      Weight ne = ed.reset ? c0 + ed.weight : energy + ed.weight;
      Weight nl = ed.reset ? std::min(c0, cap) + ed.weight : level + ed.weight;
      play.push_back(ed.dst);
      bool ok = rec(ne, std::min(nl, cap));
      if (ok) play.pop_back();
      return ok;
    };
    if (g.is_eve(u)) {
      EdgeId e = s.choose(u, level);
      if (e == kNoEdge || g.edge(e).src != u) return false;
      return step(e);
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e).src == u && !step(e)) return false;
    }
    return true;
  };
  if (!rec(c0, std::min(c0, cap))) {
    rep.status = Status::kFail;
    for (VertexId x : play) rep.counterexample += g.name(x) + " ";
  }
  return rep;
}

OracleReport brute_bound_check(const WeightedAutomaton& n, Weight b,
                               std::size_t horizon, const Limits& limits) {
  OracleReport rep;
  rep.check = "bound";
  rep.horizon = horizon;
  rep.parameters = "B=" + std::to_string(b);
  const Limits lim = with_length(limits, horizon);
  try {
    for (const Word& w : all_words(n.num_symbols(), horizon)) {
      std::vector<EnumRun> acc = accepting_runs(n, w, lim);
      if (acc.empty()) continue;
      Weight val = acc.front().prefix.back();
      for (const EnumRun& r : acc) val = std::max(val, r.prefix.back());
      std::vector<std::optional<Weight>> best(w.size() + 1);
      std::vector<std::vector<StateId>> best_run(w.size() + 1);
      enumerate_initial_runs(n, w, lim, [&](const EnumRun& r) {
        const std::size_t i = r.states.size() - 1;
        if (!best[i] || *best[i] < r.prefix.back()) {
          best[i] = r.prefix.back();
          best_run[i] = r.states;
        }
      });
      for (const EnumRun& r : acc) {
        if (r.prefix.back() != val) continue;
        for (std::size_t i = 0; i <= w.size(); ++i) {
          if (*best[i] - r.prefix[i] > b) {
            rep.status = Status::kFail;
            std::vector<StateId> pre(r.states.begin(),
                                     r.states.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            rep.counterexample = "word '" + format_word(n.alphabet(), w) +
                                 "' prefix '" +
                                 format_word(n.alphabet(), Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i))) +
                                 "': maximal run " + run_text(n, pre) + " (" +
                                 std::to_string(r.prefix[i]) + ") vs " +
                                 run_text(n, best_run[i]) + " (" +
                                 std::to_string(*best[i]) + ")";
            return rep;
          }
        }
      }
    }
  } catch (const LimitExceeded& e) {
    rep.status = Status::kInconclusive;
    rep.counterexample = e.what();
  }
  return rep;
}

namespace {

using Vec = std::vector<std::optional<Weight>>;

Vec start_vector(const WeightedAutomaton& n) {
  Vec v(n.num_states());
  for (StateId q : n.initial()) v[q] = 0;
  return v;
}

Vec step_vector(const WeightedAutomaton& n, const Vec& v, SymbolId a) {
  Vec out(n.num_states());
  for (const Transition& t : n.transitions()) {
    if (t.symbol != a || !v[t.src]) continue;
    Weight x = *v[t.src] + t.weight;
    if (!out[t.dst] || *out[t.dst] < x) out[t.dst] = x;
  }
  return out;
}

ExtendedWeight read_out(const WeightedAutomaton& n, const Vec& v) {
  ExtendedWeight best;
  for (StateId q = 0; q < n.num_states(); ++q) {
    if (v[q] && n.is_final(q)) best = max(best, ExtendedWeight(*v[q]));
  }
  return best;
}

bool dead(const Vec& v) {
  return std::none_of(v.begin(), v.end(), [](const auto& x) { return x.has_value(); });
}

OracleReport compare_words(const WeightedAutomaton& a, const WeightedAutomaton& b,
                           std::size_t horizon, bool values, const char* name) {
  if (a.alphabet() != b.alphabet()) throw InputError("alphabet mismatch");
  OracleReport rep;
  rep.check = name;
  rep.horizon = horizon;
  Word word;
  std::function<bool(const Vec&, const Vec&)> rec = [&](const Vec& va, const Vec& vb) {
    ExtendedWeight xa = read_out(a, va), xb = read_out(b, vb);
    bool same = values ? xa == xb : xa.is_bottom() == xb.is_bottom();
    if (!same) {
      rep.status = Status::kFail;
      rep.counterexample = "word '" + format_word(a.alphabet(), word) + "': " +
                           xa.to_string() + " vs " + xb.to_string();
      return false;
    }
    if (word.size() == horizon || (dead(va) && dead(vb))) return true;
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      word.push_back(s);
      bool ok = rec(step_vector(a, va, s), step_vector(b, vb, s));
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec(start_vector(a), start_vector(b));
  return rep;
}

}  // namespace

OracleReport equivalence_check(const WeightedAutomaton& a,
                               const WeightedAutomaton& b, std::size_t horizon) {
  return compare_words(a, b, horizon, true, "equivalence");
}

OracleReport domain_check(const WeightedAutomaton& a, const WeightedAutomaton& b,
                          std::size_t horizon) {
  return compare_words(a, b, horizon, false, "domain");
}

std::optional<Weight> min_regret_sweep(const WeightedAutomaton& n, Weight r_max) {
  for (Weight r = 0; r <= r_max; ++r) {
    if (decide_r_regret(n, r).answer) return r;
  }
  return std::nullopt;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty draw range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Weight draw_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  return lo + static_cast<Weight>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool draw_bool(std::mt19937_64& rng, double p) {
  constexpr std::uint64_t kScale = 1ULL << 30;
  return static_cast<double>(draw(rng, kScale)) < p * static_cast<double>(kScale);
}

WeightedAutomaton random_automaton(std::mt19937_64& rng,
                                   const RandomAutomatonParams& p) {
  std::vector<std::string> alphabet;
  for (std::size_t a = 0; a < p.num_symbols; ++a) {
    alphabet.push_back(std::string(1, static_cast<char>('a' + a)));
  }
  while (true) {
    const std::size_t n = p.min_states + draw(rng, p.max_states - p.min_states + 1);
    AutomatonBuilder b(alphabet);
    for (std::size_t q = 0; q < n; ++q) {
      b.add_state("q" + std::to_string(q), draw_bool(rng, p.initial_probability),
                  draw_bool(rng, p.final_probability));
    }
    bool has_init = false, has_final = false;
    WeightedAutomaton probe = b.build();
    has_init = !probe.initial().empty();
    has_final = !probe.final_states().empty();
    if (!has_init) b.set_initial(static_cast<StateId>(draw(rng, n)));
    if (!has_final) b.set_final(static_cast<StateId>(draw(rng, n)));
    for (StateId s = 0; s < n; ++s) {
      for (SymbolId a = 0; a < p.num_symbols; ++a) {
        for (StateId t = 0; t < n; ++t) {
          if (draw_bool(rng, p.density)) {
            b.add_transition(s, a, draw_weight(rng, p.min_weight, p.max_weight), t);
          }
        }
      }
    }
    WeightedAutomaton out = b.build();
    if (!p.require_nonempty_trim || trim(out).num_states() > 0) return out;
  }
}

EgrArena random_arena(std::mt19937_64& rng, const RandomArenaParams& p) {
  const std::size_t n = p.min_vertices + draw(rng, p.max_vertices - p.min_vertices + 1);
  std::vector<std::string> names;
  std::vector<Owner> owners;
  for (std::size_t v = 0; v < n; ++v) {
    names.push_back("v" + std::to_string(v));
    owners.push_back(draw_bool(rng, p.eve_probability) ? Owner::kEve : Owner::kAdam);
  }
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    bool any = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!draw_bool(rng, p.density)) continue;
      any = true;
      Weight w = draw_weight(rng, p.min_weight, p.max_weight);
      bool reset = owners[u] == Owner::kAdam && draw_bool(rng, p.reset_probability);
      edges.push_back(Edge{u, v, w, reset});
    }
    if (!any) {
      VertexId v = static_cast<VertexId>(draw(rng, n));
      edges.push_back(Edge{u, v, draw_weight(rng, p.min_weight, p.max_weight), false});
    }
  }
  return EgrArena(std::move(names), std::move(owners), std::move(edges));
}

std::string describe(const RandomAutomatonParams& p, std::uint64_t seed) {
  std::ostringstream os;
  os << "seed=" << seed << " states=" << p.min_states << ".." << p.max_states
     << " symbols=" << p.num_symbols << " weights=[" << p.min_weight << ","
     << p.max_weight << "] density=" << p.density;
  return os.str();
}

}  // namespace wadet::oracle
