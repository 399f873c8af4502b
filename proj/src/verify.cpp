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

#include <algorithm>

#include "wadet/core.hpp"
#include "wadet/deciders.hpp"
#include "wadet/oracle.hpp"

namespace wadet {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult from_report(const oracle::OracleReport& r) {
  CheckResult c;
  c.name = r.check;
  c.passed = r.passed();
  c.inconclusive = r.status == oracle::Status::kInconclusive;
  c.detail = r.counterexample;
  return c;
}

}  // namespace

VerifyReport verify_witness(const WeightedAutomaton& n, const Decision& d,
                            std::size_t horizon) {
  if (!d.answer || !d.witness || !d.strategy || !d.base) {
    throw PreconditionError("decision carries no witness");
  }
  VerifyReport rep;
  rep.horizon = horizon;
  const WeightedAutomaton& w = *d.witness;
  const WeightedAutomaton tn = trim(n);
  oracle::Limits limits;
  limits.max_word_length = horizon;

  rep.checks.push_back({"deterministic", is_deterministic(w), false, ""});
  {
    bool ok = d.witness_projection && check_homomorphism(*d.witness_projection, w, *d.base);
    rep.checks.push_back({"homomorphism", ok, false, ok ? "" : "projection is not a homomorphism"});
  }

  const bool delay = d.question == Question::kKDelay ||
                     d.question == Question::kZeroDelay ||
                     d.question == Question::kSemiAlgorithm;
  if (delay) {
    rep.checks.push_back(from_report(oracle::equivalence_check(tn, w, horizon)));
    const unsigned k = d.k.value_or(0);
    CheckResult c{"k-inclusion", false, false, ""};
    try {
      auto delay_needed = oracle::brute_min_delay(w, tn, horizon, limits);
      if (!delay_needed) {
        c.detail = "a run of the witness has no equal-valued run";
      } else if (*delay_needed > static_cast<Weight>(k)) {
        c.detail = "needs delay " + std::to_string(*delay_needed);
      } else {
        c.passed = true;
      }
    } catch (const oracle::LimitExceeded& e) {
      c.inconclusive = true;
      c.detail = e.what();
    }
    rep.checks.push_back(c);
  } else {
    rep.checks.push_back(from_report(oracle::domain_check(tn, w, horizon)));
    const Weight bound = d.question == Question::kExistsRegret
                             ? d.regret_bound.value_or(0)
                             : d.r.value_or(0);
    CheckResult c{"regret", false, false, ""};
    try {
      oracle::RegretOutcome o = oracle::brute_regret(*d.base, *d.strategy, horizon, limits);
      if (o.infinite) {
        c.detail = "strategy run rejected on '" +
                   format_word(n.alphabet(), o.worst_word.value_or(Word{})) + "'";
      } else if (!o.value.is_bottom() && o.value.value() > bound) {
        c.detail = "regret " + o.value.to_string() + " on '" +
                   format_word(n.alphabet(), o.worst_word.value_or(Word{})) + "'";
      } else {
        c.passed = true;
      }
    } catch (const oracle::LimitExceeded& e) {
      c.inconclusive = true;
      c.detail = e.what();
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace wadet
