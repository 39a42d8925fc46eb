#pragma once

// Polynomial-time decision procedures for the tractable program classes,
// each guarded by the arity class it is sound for.
//
// Existence decisions are always polynomial. For the positive-proper class
// the decision comes from the absence of a contradictory rule and a witness
// answer set is only extracted by the capped subset oracle; for the dual Horn
// and 2-literal classes the witness is minimized polynomially, one atom at a
// time, by re-running the class's own model-existence test.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arity.hpp"
#include "errors.hpp"
#include "program.hpp"
#include "propagation.hpp"
#include "semantics.hpp"

namespace arity_asp {

enum class Engine {
  EasPositiveProper,
  EasHorn,
  EasDualHorn,
  EasTwoLiteral,
  EasEmptyCandidate,
  SuppFacts,
  SuppModelExists,
  SuppHornGfp,
  SuppRewrite,
  SuppSkepCycle,
  SearchNp,
  SearchSigma2,
  Oracle,
};

inline std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::EasPositiveProper: return "EAS_POSITIVE_PROPER";
    case Engine::EasHorn: return "EAS_HORN";
    case Engine::EasDualHorn: return "EAS_DUALHORN";
    case Engine::EasTwoLiteral: return "EAS_2LIT";
    case Engine::EasEmptyCandidate: return "EAS_EMPTY_CANDIDATE";
    case Engine::SuppFacts: return "SUPP_FACTS";
    case Engine::SuppModelExists: return "SUPP_MODEL_EXISTS";
    case Engine::SuppHornGfp: return "SUPP_HORN_GFP";
    case Engine::SuppRewrite: return "SUPP_REWRITE";
    case Engine::SuppSkepCycle: return "SUPP_SKEP_CYCLE";
    case Engine::SearchNp: return "SEARCH_NP";
    case Engine::SearchSigma2: return "SEARCH_SIGMA2";
    case Engine::Oracle: return "ORACLE";
  }
  return "?";
}

inline bool is_poly_engine(Engine e) {
  return e != Engine::SearchNp && e != Engine::SearchSigma2 && e != Engine::Oracle;
}

namespace classes {

inline const AritySet kEasPositiveProper{{kInf, kInf, 0}, {0, 0, 0}};
inline const AritySet kEasHorn{{1, kInf, 0}, {0, kInf, kInf}};
inline const AritySet kDualHorn{{kInf, 1, 0}, {0, 1, 0}};
inline const AritySet kTwoLiteral{{0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {1, 0, 0}, {1, 1, 0}, {2, 0, 0}};
inline const AritySet kNormal{{1, kInf, kInf}, {0, kInf, kInf}};
inline const AritySet kDualHornReducts{{kInf, 1, kInf}, {0, kInf, kInf}};
inline const AritySet kPositive{{kInf, kInf, 0}, {0, kInf, 0}};

inline const AritySet kSuppFacts{{1, 0, 0}, {0, kInf, kInf}};
inline const AritySet kSuppHornPositiveConstraints{{1, kInf, 0}, {0, kInf, 0}};
inline const AritySet kSuppTwoLiteral{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}};
inline const AritySet kSuppHornNegativeConstraints{{1, kInf, 0}, {0, 0, kInf}};
inline const AritySet kSuppRewrite{{1, 1, 0}, {0, 1, kInf}};
inline const AritySet kSuppSkepCycle{{1, 1, 0}, {0, kInf, 0}};

inline const AritySet kProperHorn{{1, kInf, 0}};

}  // namespace classes

/// The classes an engine accepts; a program qualifies if it belongs to any.
inline std::vector<AritySet> engine_classes(Engine e) {
  using namespace classes;
  switch (e) {
    case Engine::EasPositiveProper: return {kEasPositiveProper};
    case Engine::EasHorn: return {kEasHorn};
    case Engine::EasDualHorn: return {kDualHorn};
    case Engine::EasTwoLiteral: return {kTwoLiteral};
    case Engine::SuppFacts: return {kSuppFacts};
    case Engine::SuppModelExists:
      return {kEasPositiveProper, kDualHorn, kSuppHornPositiveConstraints, kSuppTwoLiteral};
    case Engine::SuppHornGfp: return {kSuppHornNegativeConstraints};
    case Engine::SuppRewrite: return {kSuppRewrite};
    case Engine::SuppSkepCycle: return {kSuppSkepCycle};
    default: return {};
  }
}

/// Every proper rule has a positive body atom, so the empty set is the only
/// candidate answer set.
inline bool every_proper_rule_has_positive_body(const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const Rule& r) { return r.is_constraint() || !r.pos.empty(); });
}

inline bool engine_accepts(Engine e, const Program& p) {
  if (e == Engine::EasEmptyCandidate) return every_proper_rule_has_positive_body(p);
  const auto cs = engine_classes(e);
  return std::any_of(cs.begin(), cs.end(), [&](const AritySet& d) { return member(p, d); });
}

enum class WitnessMode {
  Skip,        // decision only
  BestEffort,  // omit the witness when extracting it would exceed a cap
  Required,    // propagate OracleLimitExceeded
};

struct EngineResult {
  bool answer = false;
  std::optional<Interpretation> witness;
};

namespace detail {

inline void require(Engine e, const Program& p) {
  if (!engine_accepts(e, p))
    throw EngineMismatch(std::string(to_string(e)) + " does not accept a program with profile " + profile(p).str());
}

/// Smallest-cardinality (then lex-least) model of `sp` inside `s`.
inline Interpretation minimal_model_below(const Program& sp, const Interpretation& s, const Caps& caps) {
  const auto members = s.atoms();
  if (members.size() > caps.minimality)
    throw OracleLimitExceeded("witness minimization over " + std::to_string(members.size()) +
                              " atoms exceeds cap " + std::to_string(caps.minimality));
  std::vector<std::size_t> pick;
  std::optional<Interpretation> found;
  // Combinations of each size in lexicographic order.
  auto search = [&](auto&& self, std::size_t from, std::size_t left) -> bool {
    if (left == 0) {
      Interpretation sub;
      for (auto i : pick) sub.insert(members[i]);
      if (!is_model(sp, sub)) return false;
      found = std::move(sub);
      return true;
    }
    for (std::size_t i = from; i + left <= members.size(); ++i) {
      pick.push_back(i);
      if (self(self, i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= members.size(); ++k)
    if (search(search, 0, k)) return *found;
  throw PreconditionError("minimal_model_below: start set is not a model");
}

inline Interpretation minimize_dual_horn(const Program& sp, Interpretation s) {
  for (auto a : s.atoms()) {
    if (!s.contains(a)) continue;
    if (auto smaller = dual_horn_greatest_model(sp, s, Interpretation{a})) s = *smaller;
  }
  return s;
}

inline Interpretation minimize_two_sat(const Program& sp, Interpretation s) {
  const auto universe = atoms_of(sp);
  for (auto a : s.atoms()) {
    if (!s.contains(a)) continue;
    Program q = sp;
    for (auto b : universe.atoms())
      if (b == a || !s.contains(b)) q.add(Rule{{}, {b}, {}});
    if (auto smaller = two_sat(q)) s = *smaller;
  }
  return s;
}

inline std::optional<Interpretation> witness_by_subsets(const Program& sp, const Interpretation& start,
                                                        const Caps& caps, WitnessMode mode) {
  if (mode == WitnessMode::Skip) return std::nullopt;
  try {
    return minimal_model_below(sp, start, caps);
  } catch (const OracleLimitExceeded&) {
    if (mode == WitnessMode::Required) throw;
    return std::nullopt;
  }
}

}  // namespace detail

/// Least model of a proper Horn program's proper part.
inline Interpretation horn_least_model(const Program& p) {
  if (!member(proper_part(p), classes::kProperHorn))
    throw EngineMismatch("horn_least_model needs a proper Horn program");
  return detail::least_model(proper_part(p));
}

/// Model existence for dual Horn programs; the witness is the greatest model
/// within At(p).
inline EngineResult dual_horn_has_model(const Program& p) {
  detail::require(Engine::EasDualHorn, p);
  auto m = detail::dual_horn_greatest_model(p, atoms_of(p));
  if (!m) return {false, std::nullopt};
  return {true, std::move(m)};
}

inline EngineResult two_sat_has_model(const Program& p) {
  const bool fits = std::all_of(p.rules().begin(), p.rules().end(),
                                [](const Rule& r) { return r.neg.empty() && r.head.size() + r.pos.size() <= 2; });
  if (!fits) throw EngineMismatch("two_sat_has_model needs positive rules with at most two literals");
  auto m = detail::two_sat(p);
  if (!m) return {false, std::nullopt};
  return {true, std::move(m)};
}

/// Existence of an answer set for the tractable classes.
inline EngineResult eas_poly(const Program& p, Engine engine, const Caps& caps = {},
                             WitnessMode mode = WitnessMode::BestEffort) {
  detail::require(engine, p);
  const auto [proper, constraints] = split(p);
  switch (engine) {
    case Engine::EasPositiveProper: {
      if (has_contradictory_rule(p)) return {false, std::nullopt};
      return {true, detail::witness_by_subsets(proper, atoms_of(proper), caps, mode)};
    }
    case Engine::EasHorn: {
      auto m = detail::least_model(proper);
      if (!is_model(constraints, m)) return {false, std::nullopt};
      return {true, std::move(m)};
    }
    case Engine::EasDualHorn: {
      auto m = detail::dual_horn_greatest_model(p, atoms_of(p));
      if (!m) return {false, std::nullopt};
      if (mode == WitnessMode::Skip) return {true, std::nullopt};
      return {true, detail::minimize_dual_horn(proper, *m)};
    }
    case Engine::EasTwoLiteral: {
      auto m = detail::two_sat(p);
      if (!m) return {false, std::nullopt};
      if (mode == WitnessMode::Skip) return {true, std::nullopt};
      return {true, detail::minimize_two_sat(proper, *m)};
    }
    case Engine::EasEmptyCandidate: {
      if (!is_model(constraints, Interpretation{})) return {false, std::nullopt};
      return {true, Interpretation{}};
    }
    default:
      throw EngineMismatch(std::string(to_string(engine)) + " is not an answer-set existence engine");
  }
}

/// Greatest supported model of a proper Horn program: iterate M -> heads of
/// M-applicable rules downward from At(p).
inline Interpretation horn_greatest_supported(const Program& p) {
  if (!member(p, classes::kProperHorn)) throw EngineMismatch("horn_greatest_supported needs a proper Horn program");
  Interpretation m = atoms_of(p);
  for (;;) {
    Interpretation next;
    for (const auto& r : p.rules())
      if (body_holds(m, r)) next.insert(r.head.front());
    if (next == m) return m;
    m = std::move(next);
  }
}

struct RewriteTrace {
  Program residue;
  std::vector<Atom> facts;  // atoms removed as facts, in removal order
};

namespace detail {

inline bool occurs_in(const std::vector<Atom>& xs, Atom a) { return std::find(xs.begin(), xs.end(), a) != xs.end(); }

inline void erase_atom(std::vector<Atom>& xs, Atom a) { xs.erase(std::remove(xs.begin(), xs.end(), a), xs.end()); }

// One rewrite step in priority order (facts, head-less atoms, constraint
// propagation through a rule), smallest atom id first. False when no step applies.
inline bool rewrite_step(std::vector<Rule>& rules, std::vector<Atom>& facts) {
  Interpretation fact_atoms, heads, occurring;
  for (const auto& r : rules) {
    for (auto a : r.head) heads.insert(a);
    for (const auto* part : {&r.head, &r.pos, &r.neg})
      for (auto a : *part) occurring.insert(a);
    if (!r.is_constraint() && r.pos.empty() && r.neg.empty()) fact_atoms.insert(r.head.front());
  }

  if (!fact_atoms.empty()) {
    const Atom a = fact_atoms.atoms().front();
    std::vector<Rule> out;
    for (auto& r : rules) {
      if (!r.is_constraint() && occurs_in(r.head, a)) continue;
      if (r.is_constraint() && occurs_in(r.neg, a)) continue;
      erase_atom(r.pos, a);
      out.push_back(std::move(r));
    }
    rules = std::move(out);
    facts.push_back(a);
    return true;
  }

  const auto headless = occurring - heads;
  if (!headless.empty()) {
    const Atom a = headless.atoms().front();
    std::vector<Rule> out;
    for (auto& r : rules) {
      if (occurs_in(r.pos, a)) continue;
      erase_atom(r.neg, a);
      out.push_back(std::move(r));
    }
    rules = std::move(out);
    return true;
  }

  Interpretation denied;
  for (const auto& r : rules)
    if (r.is_constraint() && r.neg.empty() && detail::distinct(r.pos).size() == 1) denied.insert(r.pos.front());
  for (auto a : denied.atoms()) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const auto& r = rules[i];
      if (r.is_constraint() || !occurs_in(r.head, a) || r.pos.empty()) continue;
      const Atom b = r.pos.front();
      rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      rules.push_back(Rule{{}, {b}, {}});
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Applies the three supportedness-preserving rewrite steps to fixpoint and
/// records the atoms removed as facts.
inline RewriteTrace supported_rewrite_trace(const Program& p) {
  detail::require(Engine::SuppRewrite, p);
  std::vector<Rule> rules = p.rules();
  std::vector<Atom> facts;
  while (detail::rewrite_step(rules, facts)) {
  }
  return {p.with_rules(std::move(rules)), std::move(facts)};
}

inline Program supported_rewrite(const Program& p) { return supported_rewrite_trace(p).residue; }

/// Existence of a supported model for the tractable classes.
inline EngineResult espm_poly(const Program& p, Engine engine, const Caps& caps = {},
                              WitnessMode mode = WitnessMode::BestEffort) {
  detail::require(engine, p);
  const auto [proper, constraints] = split(p);
  switch (engine) {
    case Engine::SuppFacts: {
      Interpretation m;
      for (const auto& r : proper.rules()) m.insert(r.head.front());
      if (!is_model(constraints, m)) return {false, std::nullopt};
      return {true, std::move(m)};
    }
    case Engine::SuppModelExists: {
      // A model exists iff a supported model does; a minimal model of the
      // proper part below it is an answer set of the proper part, hence supported.
      if (member(p, classes::kEasPositiveProper)) return eas_poly(p, Engine::EasPositiveProper, caps, mode);
      if (member(p, classes::kDualHorn)) return eas_poly(p, Engine::EasDualHorn, caps, mode);
      if (member(p, classes::kSuppHornPositiveConstraints)) {
        auto m = detail::least_model(proper);
        if (!is_model(constraints, m)) return {false, std::nullopt};
        return {true, std::move(m)};
      }
      auto m = detail::two_sat(p);
      if (!m) return {false, std::nullopt};
      if (mode == WitnessMode::Skip) return {true, std::nullopt};
      return {true, detail::minimize_two_sat(proper, *m)};
    }
    case Engine::SuppHornGfp: {
      auto m = horn_greatest_supported(proper);
      if (!is_model(constraints, m)) return {false, std::nullopt};
      return {true, std::move(m)};
    }
    case Engine::SuppRewrite: {
      auto trace = supported_rewrite_trace(p);
      if (has_contradictory_rule(trace.residue)) return {false, std::nullopt};
      Interpretation m;
      for (const auto& r : trace.residue.rules())
        for (auto a : r.head) m.insert(a);
      for (auto a : trace.facts) m.insert(a);
      return {true, std::move(m)};
    }
    default:
      throw EngineMismatch(std::string(to_string(engine)) + " is not a supported-model existence engine");
  }
}

/// A supported model containing `a`, if one exists: some LM(P) or LM(P + {b.})
/// is one whenever any is.
inline std::optional<Interpretation> supp_skeptical_counterexample(const Program& p, Atom a) {
  detail::require(Engine::SuppSkepCycle, p);
  const Program proper = proper_part(p);
  auto try_candidate = [&](const Interpretation& m) { return m.contains(a) && is_supported_model(p, m); };
  if (auto m = detail::least_model(proper); try_candidate(m)) return m;
  for (auto b : atoms_of(p).atoms()) {
    Program q = proper;
    q.add(Rule{{b}, {}, {}});
    if (auto m = detail::least_model(q); try_candidate(m)) return m;
  }
  return std::nullopt;
}

/// True iff no supported model of p contains a.
inline bool supp_skeptical_poly(const Program& p, Atom a) { return !supp_skeptical_counterexample(p, a); }

}  // namespace arity_asp
