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

// wadet: command-line front end.
//
// Exit codes: 0 yes/pass, 1 no/fail, 2 error or budget, 3 witness failed
// verification.

#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wadet/constructions.hpp"
#include "wadet/core.hpp"
#include "wadet/corpus.hpp"
#include "wadet/deciders.hpp"
#include "wadet/io.hpp"
#include "wadet/oracle.hpp"

namespace {

using namespace wadet;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr int kMismatch = 3;

struct Globals {
  std::size_t max_states = 1000000;
  std::size_t max_arena = 10000000;
  std::size_t horizon = 6;

  Budget budget() const { return Budget{max_states, max_arena}; }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::save_file(path, text);
  }
}

WeightedAutomaton load_automaton(const std::string& path) {
  return io::read_automaton(io::load_file(path));
}

EgrArena load_arena(const std::string& path) {
  return io::read_arena(io::load_file(path));
}

VertexId vertex(const EgrArena& g, const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v) throw InputError("unknown vertex '" + name + "'");
  return *v;
}

json opt(const std::optional<Weight>& x) { return x ? json(*x) : json(nullptr); }

json report_of(const Decision& d) {
  json j;
  j["format"] = io::kReportFormat;
  j["question"] = question_name(d.question);
  j["answer"] = d.answer ? "yes" : "no";
  j["k"] = d.k ? json(*d.k) : json(nullptr);
  j["r"] = opt(d.r);
  j["joker_won"] = d.joker_won;
  j["joker_credit"] = opt(d.joker_credit);
  j["bound"] = opt(d.bound);
  j["regret_bound"] = opt(d.regret_bound);
  j["energy_credit"] = opt(d.energy_credit);
  j["base_states"] = d.base_states;
  j["det_states"] = d.det_states;
  j["arena_vertices"] = d.arena_vertices;
  j["notes"] = d.notes;
  return j;
}

int run_decide(const Globals& gl, const std::string& question, long long param,
               const std::string& input, const std::string& witness_out,
               const std::string& strategy_out, const std::string& report_out,
               std::optional<std::size_t> verify) {
  WeightedAutomaton n = load_automaton(input);
  DeciderOptions opts;
  opts.budget = gl.budget();
  if (param < 0) throw InputError("parameter must be nonnegative");
  Decision d;
  if (question == "kdelay") {
    d = decide_k_delay(n, static_cast<unsigned>(param), opts);
  } else if (question == "zerodelay") {
    d = decide_0_delay(n, opts);
  } else if (question == "regret") {
    d = decide_r_regret(n, param, opts);
  } else if (question == "regret-any") {
    d = decide_exists_regret(n, opts);
  } else {
    d = semialgorithm_determinize(n, static_cast<unsigned>(param), opts);
  }
  std::cout << (d.answer ? "yes" : "no");
  if (d.answer && d.k && question == "semidet") std::cout << " k=" << *d.k;
  if (d.answer && d.regret_bound) std::cout << " regret=" << *d.regret_bound;
  std::cout << "\n";
  json rep = report_of(d);
  int code = d.answer ? kYes : kNo;
  if (d.answer && !witness_out.empty()) {
    io::save_file(witness_out, io::write_automaton(*d.witness));
    rep["witness"] = witness_out;
  }
  if (d.answer && !strategy_out.empty()) {
    io::save_file(strategy_out, io::write_mealy(*d.strategy));
    rep["strategy"] = strategy_out;
  }
  if (verify && d.answer) {
    VerifyReport v = verify_witness(n, d, *verify);
    json checks = json::array();
    for (const CheckResult& c : v.checks) {
      checks.push_back({{"name", c.name},
                        {"status", c.passed ? "pass" : c.inconclusive ? "inconclusive" : "fail"},
                        {"detail", c.detail}});
      if (!c.passed) {
        std::cerr << "verify " << c.name << ": "
                  << (c.inconclusive ? "inconclusive" : "FAILED") << " " << c.detail << "\n";
      }
    }
    rep["verify"] = {{"horizon", v.horizon}, {"checks", checks}};
    if (!v.passed()) code = kMismatch;
  }
  if (!report_out.empty()) emit(report_out, io::dump_json(rep));
  return code;
}

int print_report(const oracle::OracleReport& r) {
  std::cout << oracle::status_name(r.status);
  if (!r.counterexample.empty()) std::cout << ": " << r.counterexample;
  std::cout << "\n";
  switch (r.status) {
    case oracle::Status::kPass:
      return kYes;
    case oracle::Status::kFail:
      return kNo;
    case oracle::Status::kInconclusive:
      return kError;
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinization of max-plus weighted automata"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--max-states", gl.max_states, "State budget for constructions")
      ->capture_default_str();
  app.add_option("--max-arena", gl.max_arena, "Vertex budget for game arenas")
      ->capture_default_str();
  app.add_option("--horizon", gl.horizon, "Word length bound for oracle checks")
      ->capture_default_str();

  std::function<int()> action;

  // eval
  std::string in, in2, out, word;
  auto* eval = app.add_subcommand("eval", "Print the value of a word or 'undefined'");
  eval->add_option("automaton", in)->required();
  eval->add_option("word", word)->required();
  eval->callback([&] {
    action = [&] {
      WeightedAutomaton n = load_automaton(in);
      std::cout << evaluate(n, parse_word(n.alphabet(), word)).to_string() << "\n";
      return kYes;
    };
  });

  // transform
  long long param = 0;
  auto* transform = app.add_subcommand("transform", "Apply a construction");
  transform->require_subcommand(1);
  auto add_transform = [&](const std::string& name, const std::string& help,
                           bool takes_param,
                           std::function<WeightedAutomaton(const WeightedAutomaton&)> f) {
    auto* sub = transform->add_subcommand(name, help);
    if (takes_param) sub->add_option("param", param)->required();
    sub->add_option("input", in)->required();
    sub->add_option("output", out, "Output file (default stdout)");
    sub->callback([&, f] {
      action = [&, f] {
        emit(out, io::write_automaton(f(load_automaton(in))));
        return kYes;
      };
    });
  };
  auto unsigned_param = [&] {
    if (param < 0) throw InputError("parameter must be nonnegative");
    return static_cast<unsigned>(param);
  };
  add_transform("trim", "Keep accessible and co-accessible states", false,
                [](const WeightedAutomaton& n) { return trim(n); });
  add_transform("pairdet", "Pair-determinization", false,
                [&](const WeightedAutomaton& n) { return pair_determinize(n, gl.budget()); });
  add_transform("delay", "Delay construction with bound k", true,
                [&](const WeightedAutomaton& n) { return delay_construct(n, unsigned_param()); });
  add_transform("delaysubset", "Delay-subset construction with bound k", true,
                [&](const WeightedAutomaton& n) {
                  return delay_subset_construct(n, unsigned_param(), gl.budget());
                });
  add_transform("scale", "Multiply every weight by x", true,
                [&](const WeightedAutomaton& n) { return scale(n, param); });
  add_transform("gamma", "Round weights of a DWA with parameter k", true,
                [&](const WeightedAutomaton& n) { return gamma_round(n, unsigned_param()); });
  add_transform("bounddet", "Determinization with cutoff B (input must be trim)", true,
                [&](const WeightedAutomaton& n) { return bounded_determinize(n, param, gl.budget()); });
  add_transform("joker", "Determinize using the Joker-game bound", false,
                [&](const WeightedAutomaton& n) {
                  JokerOptions jo;
                  jo.budget = gl.budget();
                  return determinize_via_joker(n, JokerBound::kCredit, jo);
                });

  // decide
  std::string witness_out, strategy_out, report_out;
  std::optional<std::size_t> verify;
  auto* decide = app.add_subcommand("decide", "Decide a determinizability question");
  decide->require_subcommand(1);
  decide->fallthrough();
  decide->add_option("--witness", witness_out, "Write the witness DWA on yes");
  decide->add_option("--strategy", strategy_out, "Write the Mealy strategy on yes");
  decide->add_option("--report", report_out, "Write a JSON report ('-' for stdout)");
  decide->add_option("--verify", verify, "Check the witness with the oracles up to this length");
  auto add_question = [&](const std::string& name, const std::string& help,
                          const std::string& param_name) {
    auto* sub = decide->add_subcommand(name, help);
    if (!param_name.empty()) sub->add_option(param_name, param)->required();
    sub->add_option("input", in)->required();
    sub->callback([&, name] {
      action = [&, name] {
        return run_decide(gl, name, param, in, witness_out, strategy_out, report_out, verify);
      };
    });
  };
  add_question("kdelay", "k-delay determinizability", "k");
  add_question("zerodelay", "0-delay determinizability", "");
  add_question("regret", "r-regret determinizability", "r");
  add_question("regret-any", "Determinizability with some finite regret", "");
  add_question("semidet", "Try delays 0..kmax", "kmax");

  // egr
  std::string vname;
  long long credit = 0;
  auto* egr = app.add_subcommand("egr", "Energy games with resets");
  egr->require_subcommand(1);
  auto* solve = egr->add_subcommand("solve", "Winner from a vertex with an initial credit");
  solve->add_option("vertex", vname)->required();
  solve->add_option("credit", credit)->required();
  solve->add_option("arena", in)->required();
  solve->callback([&] {
    action = [&] {
      EgrArena g = load_arena(in);
      if (credit < 0) throw InputError("credit must be nonnegative");
      bool eve = solve_egr(g, vertex(g, vname), credit);
      std::cout << (eve ? "eve" : "adam") << "\n";
      return eve ? kYes : kNo;
    };
  });
  auto* mincredit = egr->add_subcommand("mincredit", "Least winning credit or 'none'");
  mincredit->add_option("vertex", vname)->required();
  mincredit->add_option("arena", in)->required();
  mincredit->callback([&] {
    action = [&] {
      EgrArena g = load_arena(in);
      auto c = minimal_credit(g, vertex(g, vname));
      std::cout << (c ? std::to_string(*c) : "none") << "\n";
      return c ? kYes : kNo;
    };
  });
  std::optional<long long> region_credit;
  auto* region = egr->add_subcommand("region", "Eve's winning vertices");
  region->add_option("arena", in)->required();
  region->add_option("--credit", region_credit, "Initial credit (default |V| w_max)");
  region->callback([&] {
    action = [&] {
      EgrArena g = load_arena(in);
      Weight c = region_credit ? *region_credit : g.credit_cap();
      if (c < 0) throw InputError("credit must be nonnegative");
      for (VertexId v : win_region(g, c)) std::cout << g.name(v) << "\n";
      return kYes;
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Write a corpus fixture");
  gen->require_subcommand(1);
  auto add_fixture = [&](const std::string& name, const std::string& help,
                         bool takes_param, std::function<std::string()> f) {
    auto* sub = gen->add_subcommand(name, help);
    if (takes_param) sub->add_option("param", param)->required();
    sub->add_option("output", out, "Output file (default stdout)");
    sub->callback([&, f] {
      action = [&, f] {
        emit(out, f());
        return kYes;
      };
    });
  };
  auto automaton = [](WeightedAutomaton a) { return io::write_automaton(a); };
  add_fixture("fig1-left", "Delay-k example, nondeterministic side", true,
              [&] { return automaton(corpus::make_fig1_left(param)); });
  add_fixture("fig1-right", "Delay-k example, deterministic side", true,
              [&] { return automaton(corpus::make_fig1_right(param)); });
  add_fixture("fig2-left", "Delay-2k example, nondeterministic side", true,
              [&] { return automaton(corpus::make_fig2_left(param)); });
  add_fixture("fig2-right", "Delay-2k example, deterministic side", true,
              [&] { return automaton(corpus::make_fig2_right(param)); });
  add_fixture("fig3", "Regret-1 example", false,
              [&] { return automaton(corpus::make_fig3()); });
  add_fixture("jpair", "j-pair family over n letters", true,
              [&] { return automaton(corpus::make_jpair(unsigned_param())); });
  add_fixture("quadregret", "Family with regret k^2", true,
              [&] { return automaton(corpus::make_quadregret(unsigned_param())); });
  add_fixture("maxab", "max(#a, #b)", false,
              [&] { return automaton(corpus::make_maxab()); });
  add_fixture("egr-example", "Energy game with one reset edge", false,
              [&] { return io::write_arena(corpus::make_egr_example()); });
  add_fixture("random-automaton", "Random automaton from a seed", true, [&] {
    std::mt19937_64 rng(static_cast<std::uint64_t>(param));
    return automaton(oracle::random_automaton(rng));
  });
  add_fixture("random-arena", "Random arena from a seed", true, [&] {
    std::mt19937_64 rng(static_cast<std::uint64_t>(param));
    return io::write_arena(oracle::random_arena(rng));
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force reference checks");
  orc->require_subcommand(1);
  auto limits = [&] {
    oracle::Limits l;
    l.max_word_length = gl.horizon;
    return l;
  };
  auto* equiv = orc->add_subcommand("equiv", "Same value on every word up to the horizon");
  equiv->add_option("a", in)->required();
  equiv->add_option("b", in2)->required();
  equiv->callback([&] {
    action = [&] {
      return print_report(oracle::equivalence_check(load_automaton(in), load_automaton(in2), gl.horizon));
    };
  });
  auto* domain = orc->add_subcommand("domain", "Same domain up to the horizon");
  domain->add_option("a", in)->required();
  domain->add_option("b", in2)->required();
  domain->callback([&] {
    action = [&] {
      return print_report(oracle::domain_check(load_automaton(in), load_automaton(in2), gl.horizon));
    };
  });
  auto* value = orc->add_subcommand("value", "Value by run enumeration");
  value->add_option("automaton", in)->required();
  value->add_option("word", word)->required();
  value->callback([&] {
    action = [&] {
      WeightedAutomaton n = load_automaton(in);
      Word w = parse_word(n.alphabet(), word);
      std::cout << oracle::brute_value(n, w, limits()).to_string() << "\n";
      return kYes;
    };
  });
  auto* regret = orc->add_subcommand("regret", "Regret of a Mealy strategy up to the horizon");
  regret->add_option("automaton", in)->required();
  regret->add_option("strategy", in2)->required();
  regret->callback([&] {
    action = [&] {
      WeightedAutomaton n = load_automaton(in);
      MealyMachine m = io::read_mealy(io::load_file(in2));
      if (m.num_symbols() != n.num_symbols()) throw InputError("strategy alphabet size mismatch");
      oracle::RegretOutcome o = oracle::brute_regret(n, m, gl.horizon, limits());
      std::cout << (o.infinite ? "infinite" : o.value.is_bottom() ? "0" : o.value.to_string()) << "\n";
      return kYes;
    };
  });
  auto* delay = orc->add_subcommand("delay", "Least delay of D into N up to the horizon");
  delay->add_option("d", in)->required();
  delay->add_option("n", in2)->required();
  delay->callback([&] {
    action = [&] {
      auto k = oracle::brute_min_delay(load_automaton(in), load_automaton(in2), gl.horizon, limits());
      std::cout << (k ? std::to_string(*k) : "none") << "\n";
      return k ? kYes : kNo;
    };
  });
  auto* bound = orc->add_subcommand("bound", "Check that maximal runs stay within B");
  bound->add_option("b", param)->required();
  bound->add_option("automaton", in)->required();
  bound->callback([&] {
    action = [&] {
      return print_report(oracle::brute_bound_check(trim(load_automaton(in)), param, gl.horizon, limits()));
    };
  });
  auto* begr = orc->add_subcommand("egr", "Energy game winner by table fixpoint");
  begr->add_option("vertex", vname)->required();
  begr->add_option("credit", credit)->required();
  begr->add_option("arena", in)->required();
  begr->callback([&] {
    action = [&] {
      EgrArena g = load_arena(in);
      if (credit < 0) throw InputError("credit must be nonnegative");
      bool eve = oracle::brute_egr(g, vertex(g, vname), credit);
      std::cout << (eve ? "eve" : "adam") << "\n";
      return eve ? kYes : kNo;
    };
  });
  auto* fcg = orc->add_subcommand("first-cycle", "Winner of the first cycle game");
  fcg->add_option("vertex", vname)->required();
  fcg->add_option("arena", in)->required();
  fcg->callback([&] {
    action = [&] {
      EgrArena g = load_arena(in);
      bool eve = oracle::brute_first_cycle_game(g, vertex(g, vname)) == oracle::Player::kEve;
      std::cout << (eve ? "eve" : "adam") << "\n";
      return eve ? kYes : kNo;
    };
  });

  // dot
  bool arena_input = false;
  auto* dot = app.add_subcommand("dot", "Graphviz rendering of an automaton or arena");
  dot->add_option("input", in)->required();
  dot->add_flag("--arena", arena_input, "Input is an arena");
  dot->callback([&] {
    action = [&] {
      std::cout << (arena_input ? io::arena_dot(load_arena(in))
                                : io::automaton_dot(load_automaton(in)));
      return kYes;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
