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

#ifndef WADET_EGAMES_HPP_
#define WADET_EGAMES_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wadet/errors.hpp"
#include "wadet/weight.hpp"

namespace wadet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Owner : std::uint8_t { kAdam, kEve };

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 0;
  bool reset = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Energy game with resets. Edges are sorted by (src, dst, reset, weight);
/// parallel edges are allowed when they differ in weight or reset flag.
/// Every vertex needs an outgoing edge and resets must leave Adam vertices.
class EgrArena {
 public:
  EgrArena(std::vector<std::string> names, std::vector<Owner> owners,
           std::vector<Edge> edges);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Owner owner(VertexId v) const { return owners_[v]; }
  bool is_eve(VertexId v) const { return owners_[v] == Owner::kEve; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  // Edge ids first_out(v) .. first_out(v + 1) leave v.
  EdgeId first_out(VertexId v) const { return offsets_[v]; }
  EdgeId end_out(VertexId v) const { return offsets_[v + 1]; }
  // Ids of edges entering v.
  std::span<const EdgeId> in_edges(VertexId v) const;
  bool has_resets() const { return has_resets_; }
  // max |w| over all edges.
  Weight max_weight() const { return max_weight_; }
  // |V| * w_max, the credit cap of the safety reduction.
  Weight credit_cap() const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  // Same arena with every reset edge turned into an ordinary edge.
  EgrArena without_resets() const;

 private:
  std::vector<std::string> names_;
  std::vector<Owner> owners_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> offsets_;
  std::vector<EdgeId> in_offsets_;
  std::vector<EdgeId> in_list_;
  Weight max_weight_ = 0;
  bool has_resets_ = false;
  std::unordered_map<std::string, VertexId> index_;
};

// c0 plus the weights from the last reset edge on (that edge included).
Weight energy_level(const EgrArena& g, std::span<const EdgeId> path, Weight c0);
// Vertex-sequence form; consecutive vertices must be joined by exactly one edge.
Weight energy_level_vertices(const EgrArena& g,
                             std::span<const VertexId> path, Weight c0);

/// Product of the arena with credit levels 0..cap plus bottom. Vertex
/// (v, level) has id v * (cap + 2) + level; level cap + 1 is bottom.
class SafetyArena {
 public:
  SafetyArena(const EgrArena& g, Weight c0);

  Weight cap() const { return cap_; }
  Weight c0() const { return c0_; }
  std::size_t levels() const { return static_cast<std::size_t>(cap_) + 2; }
  std::size_t num_vertices() const { return owners_.size(); }
  std::size_t id(VertexId v, Weight level) const {
    return v * levels() + static_cast<std::size_t>(level);
  }
  std::size_t bottom(VertexId v) const { return id(v, cap_ + 1); }
  VertexId base_vertex(std::size_t x) const {
    return static_cast<VertexId>(x / levels());
  }
  // nullopt for bottom.
  std::optional<Weight> level(std::size_t x) const;
  bool unsafe(std::size_t x) const { return x % levels() == levels() - 1; }
  Owner owner(std::size_t x) const { return owners_[x]; }
  std::size_t first_succ(std::size_t x) const { return offsets_[x]; }
  std::size_t end_succ(std::size_t x) const { return offsets_[x + 1]; }
  std::size_t succ(std::size_t i) const { return succ_[i]; }
  // Arena edge behind successor slot i (kNoEdge for the bottom self-loop).
  EdgeId succ_edge(std::size_t i) const { return succ_edge_[i]; }

 private:
  Weight cap_;
  Weight c0_;
  std::vector<Owner> owners_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> succ_;
  std::vector<EdgeId> succ_edge_;
};

SafetyArena to_safety_game(const EgrArena& g, Weight c0);

struct SafetySolution {
  std::vector<bool> eve_wins;            // per product vertex
  std::vector<std::size_t> choice;       // successor slot for Eve, or npos
};

// Eve's region is the complement of Adam's attractor to the unsafe set.
SafetySolution solve_safety(const SafetyArena& s);

/// Strategy for Eve over V with the credit level as memory. A strategy from
/// the credit fixpoint ignores the level.
struct PositionalStrategy {
  Weight cap = 0;
  bool uses_level = true;
  // uses_level: choice[v * (cap + 1) + level]; otherwise choice[v].
  std::vector<EdgeId> choice;

  EdgeId choose(VertexId v, Weight level) const;
};

enum class EgrMethod { kSafetyReduction, kCreditFixpoint, kAuto };

struct EgrOptions {
  EgrMethod method = EgrMethod::kAuto;
  // kAuto uses the safety reduction while |V| * (cap + 2) stays below this.
  std::size_t safety_product_limit = 2000000;
};

// Least credit needed per vertex for a fixed reset value c0; nullopt when
// Adam wins at every credit. choice holds an optimal edge at Eve vertices.
struct CreditSolution {
  std::vector<std::optional<Weight>> credit;
  std::vector<EdgeId> choice;
};

// Progress-measure fixpoint for the game where resets re-seed the credit
// from c0. With no resets the result does not depend on c0.
CreditSolution solve_credit_fixpoint(const EgrArena& g, Weight c0);

bool solve_egr(const EgrArena& g, VertexId v, Weight c0,
               const EgrOptions& opts = {});
// Vertices Eve wins from with credit c0 (reset value c0).
std::vector<bool> win_mask(const EgrArena& g, Weight c0,
                           const EgrOptions& opts = {});
std::vector<VertexId> win_region(const EgrArena& g, const EgrOptions& opts = {});
std::vector<VertexId> win_region(const EgrArena& g, Weight c0,
                                 const EgrOptions& opts = {});
// Least c0 in 0..cap with solve_egr true; nullopt if none.
std::optional<Weight> minimal_credit(const EgrArena& g, VertexId v,
                                     const EgrOptions& opts = {});
// Least c0 with which Eve wins from every vertex in targets.
std::optional<Weight> least_common_credit(const EgrArena& g,
                                          const std::vector<VertexId>& targets,
                                          const EgrOptions& opts = {});
PositionalStrategy extract_strategy(const EgrArena& g, Weight c0,
                                    const EgrOptions& opts = {});
PositionalStrategy extract_strategy(const EgrArena& g, VertexId from,
                                    Weight c0, const EgrOptions& opts = {});

}  // namespace wadet

#endif  // WADET_EGAMES_HPP_
