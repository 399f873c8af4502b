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

#include "wadet/egames.hpp"

#include <algorithm>
#include <tuple>

namespace wadet {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max();
constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxSafetyEdges = 200000000;

}  // namespace

EgrArena::EgrArena(std::vector<std::string> names, std::vector<Owner> owners,
                   std::vector<Edge> edges)
    : names_(std::move(names)), owners_(std::move(owners)) {
  const std::size_t n = names_.size();
  if (owners_.size() != n) throw InputError("owner table size mismatch");
  // Names are diagnostic; the first vertex wins on lookup.
  for (VertexId v = 0; v < n; ++v) index_.emplace(names_[v], v);
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) throw InputError("edge references an undeclared vertex");
    if (e.reset && owners_[e.src] == Owner::kEve) {
      throw InputError("reset edge leaves Eve vertex '" + names_[e.src] + "'");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst, a.reset, a.weight) <
           std::tie(b.src, b.dst, b.reset, b.weight);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
    Weight a = e.weight < 0 ? checked_sub(0, e.weight) : e.weight;
    max_weight_ = std::max(max_weight_, a);
    has_resets_ = has_resets_ || e.reset;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    offsets_[i] += offsets_[i - 1];
    in_offsets_[i] += in_offsets_[i - 1];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (offsets_[v] == offsets_[v + 1]) {
      throw InputError("arena has sink '" + names_[v] + "'");
    }
  }
  in_list_.resize(edges_.size());
  std::vector<EdgeId> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) in_list_[fill[edges_[e].dst]++] = e;
}

std::span<const EdgeId> EgrArena::in_edges(VertexId v) const {
  return std::span<const EdgeId>(in_list_.data() + in_offsets_[v],
                                 in_offsets_[v + 1] - in_offsets_[v]);
}

Weight EgrArena::credit_cap() const {
  return checked_mul(static_cast<Weight>(num_vertices()), max_weight_);
}

std::optional<VertexId> EgrArena::find_vertex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EgrArena EgrArena::without_resets() const {
  std::vector<Edge> es = edges_;
  for (Edge& e : es) e.reset = false;
  return EgrArena(names_, owners_, std::move(es));
}

Weight energy_level(const EgrArena& g, std::span<const EdgeId> path,
                    Weight c0) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.num_edges()) throw InputError("unknown edge in path");
    if (i > 0 && g.edge(path[i - 1]).dst != g.edge(path[i]).src) {
      throw InputError("edges do not form a path");
    }
    if (g.edge(path[i]).reset) start = i;
  }
  Weight level = c0;
  for (std::size_t i = start; i < path.size(); ++i) {
    level = checked_add(level, g.edge(path[i]).weight);
  }
  return level;
}

Weight energy_level_vertices(const EgrArena& g,
                             std::span<const VertexId> path, Weight c0) {
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] >= g.num_vertices() || path[i + 1] >= g.num_vertices()) {
      throw InputError("unknown vertex in path");
    }
    EdgeId found = kNoEdge;
    for (EdgeId e = g.first_out(path[i]); e < g.end_out(path[i]); ++e) {
      if (g.edge(e).dst != path[i + 1]) continue;
      if (found != kNoEdge) throw InputError("ambiguous path: parallel edges");
      found = e;
    }
    if (found == kNoEdge) throw InputError("vertices do not form a path");
    edges.push_back(found);
  }
  if (path.empty()) throw InputError("empty path");
  return energy_level(g, edges, c0);
}

SafetyArena::SafetyArena(const EgrArena& g, Weight c0)
    : cap_(g.credit_cap()) {
  if (c0 < 0) throw PreconditionError("initial credit must be nonnegative");
  c0_ = std::min(c0, cap_);
  const std::size_t lv = levels();
  const std::size_t total = g.num_vertices() * lv;
  if (g.num_edges() * lv > kMaxSafetyEdges) {
    throw BudgetExceeded("safety product too large");
  }
  owners_.resize(total);
  offsets_.assign(total + 1, 0);
  succ_.reserve(g.num_edges() * (lv - 1) + g.num_vertices());
  succ_edge_.reserve(succ_.capacity());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t l = 0; l < lv; ++l) {
      const std::size_t x = v * lv + l;
      owners_[x] = g.owner(v);
      if (l == lv - 1) {
        succ_.push_back(x);
        succ_edge_.push_back(kNoEdge);
      } else {
        for (EdgeId e = g.first_out(v); e < g.end_out(v); ++e) {
          const Edge& ed = g.edge(e);
          Weight d = checked_add(ed.reset ? c0_ : static_cast<Weight>(l), ed.weight);
          succ_.push_back(d < 0 ? bottom(ed.dst) : id(ed.dst, std::min(d, cap_)));
          succ_edge_.push_back(e);
        }
      }
      offsets_[x + 1] = succ_.size();
    }
  }
}

std::optional<Weight> SafetyArena::level(std::size_t x) const {
  if (unsafe(x)) return std::nullopt;
  return static_cast<Weight>(x % levels());
}

SafetyArena to_safety_game(const EgrArena& g, Weight c0) {
  return SafetyArena(g, c0);
}

SafetySolution solve_safety(const SafetyArena& s) {
  const std::size_t n = s.num_vertices();
  std::vector<std::size_t> pred_off(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = s.first_succ(x); i < s.end_succ(x); ++i) {
      ++pred_off[s.succ(i) + 1];
    }
  }
  for (std::size_t x = 1; x <= n; ++x) pred_off[x] += pred_off[x - 1];
  std::vector<std::size_t> preds(pred_off.back());
  {
    std::vector<std::size_t> fill(pred_off.begin(), pred_off.end() - 1);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = s.first_succ(x); i < s.end_succ(x); ++i) {
        preds[fill[s.succ(i)]++] = x;
      }
    }
  }
  std::vector<bool> attr(n, false);
  std::vector<std::size_t> count(n);
  std::vector<std::size_t> queue;
  for (std::size_t x = 0; x < n; ++x) {
    count[x] = s.end_succ(x) - s.first_succ(x);
    if (s.unsafe(x)) {
      attr[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    std::size_t x = queue.back();
    queue.pop_back();
    for (std::size_t i = pred_off[x]; i < pred_off[x + 1]; ++i) {
      std::size_t y = preds[i];
      if (attr[y]) continue;
      if (s.owner(y) == Owner::kAdam || --count[y] == 0) {
        attr[y] = true;
        queue.push_back(y);
      }
    }
  }
  SafetySolution sol;
  sol.eve_wins.resize(n);
  sol.choice.assign(n, kNoSlot);
  for (std::size_t x = 0; x < n; ++x) {
    sol.eve_wins[x] = !attr[x];
    if (attr[x] || s.owner(x) != Owner::kEve) continue;
    for (std::size_t i = s.first_succ(x); i < s.end_succ(x); ++i) {
      if (!attr[s.succ(i)]) {
        sol.choice[x] = i;
        break;
      }
    }
  }
  return sol;
}

EdgeId PositionalStrategy::choose(VertexId v, Weight level) const {
  if (!uses_level) return choice.at(v);
  Weight l = std::clamp<Weight>(level, 0, cap);
  return choice.at(v * static_cast<std::size_t>(cap + 1) +
                   static_cast<std::size_t>(l));
}

namespace {

// lost[v] marks vertices already known to lose at this credit.
CreditSolution credit_fixpoint(const EgrArena& g, Weight c0,
                               const std::vector<bool>* lost) {
  if (c0 < 0) throw PreconditionError("initial credit must be nonnegative");
  const std::size_t n = g.num_vertices();
  // Above this sum of worst negative out-weights a play must have closed a
  // negative reset-free cycle.
  Weight top = 0;
  for (VertexId v = 0; v < n; ++v) {
    Weight worst = 0;
    for (EdgeId e = g.first_out(v); e < g.end_out(v); ++e) {
      worst = std::max(worst, -g.edge(e).weight);
    }
    top = checked_add(top, worst);
  }
  std::vector<Weight> f(n, 0);
  auto requirement = [&](const Edge& e) -> Weight {
    const Weight need = f[e.dst];
    if (need == kInf) return kInf;
    if (e.reset) return checked_add(c0, e.weight) >= need ? 0 : kInf;
    Weight r = std::max<Weight>(0, checked_sub(need, e.weight));
    return r > top ? kInf : r;
  };
  auto combine = [&](VertexId v) {
    const bool eve = g.is_eve(v);
    Weight best = eve ? kInf : 0;
    for (EdgeId e = g.first_out(v); e < g.end_out(v); ++e) {
      Weight r = requirement(g.edge(e));
      best = eve ? std::min(best, r) : std::max(best, r);
    }
    return best;
  };
  for (VertexId v = 0; v < n; ++v) {
    bool doomed = true;
    for (EdgeId e = g.first_out(v); e < g.end_out(v); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.dst != v || ed.reset || ed.weight >= 0) doomed = false;
    }
    if (doomed || (lost && (*lost)[v])) f[v] = kInf;
  }
  std::vector<VertexId> stack;
  std::vector<bool> queued(n, true);
  stack.reserve(n);
  for (VertexId v = static_cast<VertexId>(n); v-- > 0;) stack.push_back(v);
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    queued[u] = false;
    Weight nf = combine(u);
    if (nf <= f[u]) continue;
    f[u] = nf;
    for (EdgeId e : g.in_edges(u)) {
      VertexId p = g.edge(e).src;
      if (!queued[p] && f[p] != kInf) {
        queued[p] = true;
        stack.push_back(p);
      }
    }
  }
  CreditSolution sol;
  sol.credit.resize(n);
  sol.choice.assign(n, kNoEdge);
  for (VertexId v = 0; v < n; ++v) {
    if (f[v] != kInf) sol.credit[v] = f[v];
    if (!g.is_eve(v) || f[v] == kInf) continue;
    for (EdgeId e = g.first_out(v); e < g.end_out(v); ++e) {
      if (requirement(g.edge(e)) == f[v]) {
        sol.choice[v] = e;
        break;
      }
    }
  }
  return sol;
}

}  // namespace

CreditSolution solve_credit_fixpoint(const EgrArena& g, Weight c0) {
  return credit_fixpoint(g, c0, nullptr);
}

namespace {

bool use_safety(const EgrArena& g, const EgrOptions& opts) {
  switch (opts.method) {
    case EgrMethod::kSafetyReduction:
      return true;
    case EgrMethod::kCreditFixpoint:
      return false;
    case EgrMethod::kAuto:
      break;
  }
  const Weight cap = g.credit_cap();
  const double size = static_cast<double>(g.num_vertices()) *
                      (static_cast<double>(cap) + 2.0);
  return size <= static_cast<double>(opts.safety_product_limit);
}

}  // namespace

std::vector<bool> win_mask(const EgrArena& g, Weight c0,
                           const EgrOptions& opts) {
  if (c0 < 0) throw PreconditionError("initial credit must be nonnegative");
  std::vector<bool> out(g.num_vertices(), false);
  if (use_safety(g, opts)) {
    SafetyArena s(g, c0);
    SafetySolution sol = solve_safety(s);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      out[v] = sol.eve_wins[s.id(v, s.c0())];
    }
  } else {
    CreditSolution sol = solve_credit_fixpoint(g, c0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      out[v] = sol.credit[v] && *sol.credit[v] <= c0;
    }
  }
  return out;
}

bool solve_egr(const EgrArena& g, VertexId v, Weight c0,
               const EgrOptions& opts) {
  if (v >= g.num_vertices()) throw InputError("unknown vertex");
  return win_mask(g, c0, opts)[v];
}

std::vector<VertexId> win_region(const EgrArena& g, Weight c0,
                                 const EgrOptions& opts) {
  std::vector<bool> mask = win_mask(g, c0, opts);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> win_region(const EgrArena& g, const EgrOptions& opts) {
  return win_region(g, g.credit_cap(), opts);
}

std::optional<Weight> least_common_credit(const EgrArena& g,
                                          const std::vector<VertexId>& targets,
                                          const EgrOptions& opts) {
  if (!use_safety(g, opts) && !g.has_resets()) {
    CreditSolution sol = solve_credit_fixpoint(g, 0);
    Weight best = 0;
    for (VertexId v : targets) {
      if (!sol.credit.at(v)) return std::nullopt;
      best = std::max(best, *sol.credit[v]);
    }
    return best;
  }
  const Weight cap = g.credit_cap();
  std::vector<bool> top_mask = win_mask(g, cap, opts);
  for (VertexId v : targets) {
    if (!top_mask.at(v)) return std::nullopt;
  }
  // Winning is monotone in the credit, so losers at the cap stay losers.
  std::vector<bool> lost(top_mask.size());
  for (std::size_t v = 0; v < lost.size(); ++v) lost[v] = !top_mask[v];
  auto all_win = [&](Weight c0) {
    if (use_safety(g, opts)) {
      std::vector<bool> mask = win_mask(g, c0, opts);
      return std::all_of(targets.begin(), targets.end(),
                         [&](VertexId v) { return mask[v]; });
    }
    CreditSolution sol = credit_fixpoint(g, c0, &lost);
    return std::all_of(targets.begin(), targets.end(), [&](VertexId v) {
      return sol.credit[v] && *sol.credit[v] <= c0;
    });
  };
  // Exponential search from below: the least credit is usually small.
  Weight lo = 0, hi = 0;
  while (hi < cap && !all_win(hi)) {
    lo = hi + 1;
    hi = std::min(cap, 2 * hi + 1);
  }
  while (lo < hi) {
    Weight mid = lo + (hi - lo) / 2;
    if (all_win(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::optional<Weight> minimal_credit(const EgrArena& g, VertexId v,
                                     const EgrOptions& opts) {
  if (v >= g.num_vertices()) throw InputError("unknown vertex");
  return least_common_credit(g, {v}, opts);
}

PositionalStrategy extract_strategy(const EgrArena& g, Weight c0,
                                    const EgrOptions& opts) {
  if (c0 < 0) throw PreconditionError("initial credit must be nonnegative");
  PositionalStrategy st;
  if (use_safety(g, opts)) {
    SafetyArena s(g, c0);
    SafetySolution sol = solve_safety(s);
    st.cap = s.cap();
    st.uses_level = true;
    const std::size_t width = static_cast<std::size_t>(st.cap) + 1;
    st.choice.assign(g.num_vertices() * width, kNoEdge);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (std::size_t l = 0; l < width; ++l) {
        std::size_t slot = sol.choice[s.id(v, static_cast<Weight>(l))];
        if (slot != kNoSlot) st.choice[v * width + l] = s.succ_edge(slot);
      }
    }
  } else {
    CreditSolution sol = solve_credit_fixpoint(g, c0);
    st.cap = g.credit_cap();
    st.uses_level = false;
    st.choice = sol.choice;
  }
  return st;
}

PositionalStrategy extract_strategy(const EgrArena& g, VertexId from,
                                    Weight c0, const EgrOptions& opts) {
  if (!solve_egr(g, from, c0, opts)) {
    throw PreconditionError("Eve does not win from '" + g.name(from) +
                            "' with credit " + std::to_string(c0));
  }
  return extract_strategy(g, c0, opts);
}

}  // namespace wadet
