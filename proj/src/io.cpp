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

#include "wadet/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "wadet/errors.hpp"

namespace wadet::io {

using nlohmann::json;

namespace {

bool flat(const json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const json& x) {
           return x.is_structured();
         });
}

void write_value(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (!j.is_structured() || j.empty()) {
    os << j.dump();
    return;
  }
  if (flat(j)) {
    os << '[';
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << ']';
    return;
  }
  os << (j.is_array() ? "[\n" : "{\n");
  std::size_t i = 0;
  if (j.is_array()) {
    for (const json& x : j) {
      os << pad;
      write_value(os, x, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      os << pad << json(it.key()).dump() << ": ";
      write_value(os, it.value(), indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
  }
  os << std::string(static_cast<std::size_t>(indent), ' ') << (j.is_array() ? "]" : "}");
}

std::string dump(const json& j) { return dump_json(j); }

json parse(std::string_view text, std::string_view format) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || j["format"] != format) {
    throw InputError("expected a " + std::string(format) + " document");
  }
  return j;
}

// Rethrows JSON type errors as input errors.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad document: ") + e.what());
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
  std::ostringstream os;
  write_value(os, j, 0);
  os << '\n';
  return os.str();
}

std::string write_automaton(const WeightedAutomaton& a) {
  json j;
  j["format"] = kAutomatonFormat;
  j["alphabet"] = a.alphabet();
  j["states"] = a.state_names();
  json init = json::array(), fin = json::array();
  for (StateId q : a.initial()) init.push_back(a.state_name(q));
  for (StateId q : a.final_states()) fin.push_back(a.state_name(q));
  j["initial"] = init;
  j["final"] = fin;
  json ts = json::array();
  for (const Transition& t : a.transitions()) {
    ts.push_back({a.state_name(t.src), a.symbol_name(t.symbol), t.weight,
                  a.state_name(t.dst)});
  }
  j["transitions"] = ts;
  return dump(j);
}

WeightedAutomaton read_automaton(std::string_view text) {
  json j = parse(text, kAutomatonFormat);
  return guarded([&] {
    AutomatonBuilder b(j.at("alphabet").get<std::vector<std::string>>());
    for (const auto& s : j.at("states")) b.add_state(s.get<std::string>());
    for (const auto& s : j.at("initial")) b.set_initial(b.state(s.get<std::string>()));
    for (const auto& s : j.at("final")) b.set_final(b.state(s.get<std::string>()));
    for (const auto& t : j.at("transitions")) {
      if (!t.is_array() || t.size() != 4) {
        throw InputError("transition must be [source, symbol, weight, target]");
      }
      b.add_transition(t[0].get<std::string>(), t[1].get<std::string>(),
                       t[2].get<Weight>(), t[3].get<std::string>());
    }
    return b.build();
  });
}

std::string write_arena(const EgrArena& g) {
  std::set<std::string> seen(g.names().begin(), g.names().end());
  if (seen.size() != g.num_vertices()) {
    throw InputError("arena vertex names are not unique");
  }
  json j;
  j["format"] = kArenaFormat;
  json vs = json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    vs.push_back({{"name", g.name(v)}, {"owner", g.is_eve(v) ? "eve" : "adam"}});
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const Edge& e : g.edges()) {
    es.push_back({g.name(e.src), g.name(e.dst), e.weight, e.reset});
  }
  j["edges"] = es;
  return dump(j);
}

EgrArena read_arena(std::string_view text) {
  json j = parse(text, kArenaFormat);
  return guarded([&] {
    std::vector<std::string> names;
    std::vector<Owner> owners;
    std::unordered_map<std::string, VertexId> index;
    for (const auto& v : j.at("vertices")) {
      std::string name = v.at("name").get<std::string>();
      std::string owner = v.at("owner").get<std::string>();
      if (owner != "eve" && owner != "adam") {
        throw InputError("owner must be 'eve' or 'adam', got '" + owner + "'");
      }
      if (!index.emplace(name, static_cast<VertexId>(names.size())).second) {
        throw InputError("duplicate vertex '" + name + "'");
      }
      names.push_back(name);
      owners.push_back(owner == "eve" ? Owner::kEve : Owner::kAdam);
    }
    auto lookup = [&](const json& x) {
      auto it = index.find(x.get<std::string>());
      if (it == index.end()) throw InputError("unknown vertex '" + x.get<std::string>() + "'");
      return it->second;
    };
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 4) {
        throw InputError("edge must be [source, target, weight, reset]");
      }
      edges.push_back(Edge{lookup(e[0]), lookup(e[1]), e[2].get<Weight>(), e[3].get<bool>()});
    }
    return EgrArena(std::move(names), std::move(owners), std::move(edges));
  });
}

std::string write_mealy(const MealyMachine& m) {
  json j;
  j["format"] = kMealyFormat;
  j["memory"] = m.num_memory();
  j["symbols"] = m.num_symbols();
  j["initial_memory"] = m.initial_memory();
  j["initial_output"] = m.initial_output();
  json upd = json::array(), out = json::array();
  for (MemoryId s = 0; s < m.num_memory(); ++s) {
    json ru = json::array(), ro = json::array();
    for (SymbolId a = 0; a < m.num_symbols(); ++a) {
      ru.push_back(m.update(s, a));
      ro.push_back(m.output(s, a));
    }
    upd.push_back(ru);
    out.push_back(ro);
  }
  j["update"] = upd;
  j["output"] = out;
  return dump(j);
}

MealyMachine read_mealy(std::string_view text) {
  json j = parse(text, kMealyFormat);
  return guarded([&] {
    const auto mem = j.at("memory").get<std::size_t>();
    const auto syms = j.at("symbols").get<std::size_t>();
    std::vector<MemoryId> upd;
    std::vector<StateId> out;
    const auto& ju = j.at("update");
    const auto& jo = j.at("output");
    if (ju.size() != mem || jo.size() != mem) throw InputError("table size mismatch");
    for (std::size_t s = 0; s < mem; ++s) {
      if (ju[s].size() != syms || jo[s].size() != syms) {
        throw InputError("table size mismatch");
      }
      for (std::size_t a = 0; a < syms; ++a) {
        upd.push_back(ju[s][a].get<MemoryId>());
        out.push_back(jo[s][a].get<StateId>());
      }
    }
    return MealyMachine(mem, syms, j.at("initial_memory").get<MemoryId>(),
                        j.at("initial_output").get<StateId>(), std::move(upd),
                        std::move(out));
  });
}

std::string load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void save_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

std::string automaton_dot(const WeightedAutomaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    os << "  " << q << " [label=" << json(a.state_name(q)).dump()
       << (a.is_final(q) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
    if (a.is_initial(q)) {
      os << "  init" << q << " [shape=point];\n  init" << q << " -> " << q << ";\n";
    }
  }
  for (const Transition& t : a.transitions()) {
    os << "  " << t.src << " -> " << t.dst << " [label="
       << json(a.symbol_name(t.symbol) + "," + std::to_string(t.weight)).dump() << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string arena_dot(const EgrArena& g) {
  std::ostringstream os;
  os << "digraph arena {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << " [label=" << json(g.name(v)).dump()
       << (g.is_eve(v) ? ", shape=circle" : ", shape=box") << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.src << " -> " << e.dst << " [label=\"" << e.weight << "\""
       << (e.reset ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wadet::io
