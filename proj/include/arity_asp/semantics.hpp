#pragma once

// Definition-level semantics: satisfaction, the reduct, minimal models,
// answer sets, supported models and exhaustive enumeration. These are the
// ground truth every engine and transformation is checked against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "program.hpp"
#include "propagation.hpp"

namespace arity_asp {

enum class SemanticsKind { AnswerSet, Supported };

/// Exhaustive procedures fail with OracleLimitExceeded beyond these sizes.
struct Caps {
  std::size_t enumeration = 16;  // atoms, for enumerate()
  std::size_t minimality = 20;   // |M|, for subset-based minimality
};

/// M satisfies every body literal of r.
inline bool body_holds(const Interpretation& m, const Rule& r) {
  return std::all_of(r.pos.begin(), r.pos.end(), [&](Atom a) { return m.contains(a); }) &&
         std::none_of(r.neg.begin(), r.neg.end(), [&](Atom a) { return m.contains(a); });
}

inline bool satisfies(const Interpretation& m, const Rule& r) {
  if (!body_holds(m, r)) return true;
  return std::any_of(r.head.begin(), r.head.end(), [&](Atom a) { return m.contains(a); });
}

inline bool is_model(const Program& p, const Interpretation& m) {
  return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) { return satisfies(m, r); });
}

/// Drop rules with "not c" for some c in M, then strip negative literals.
inline Program reduct(const Program& p, const Interpretation& m) {
  std::vector<Rule> out;
  for (const auto& r : p.rules()) {
    if (std::any_of(r.neg.begin(), r.neg.end(), [&](Atom c) { return m.contains(c); })) continue;
    out.push_back(Rule{r.head, r.pos, {}});
  }
  return p.with_rules(std::move(out));
}

enum class MinimalityCheck {
  Auto,      // Horn or dual Horn shortcut when the program allows, else subsets
  Subsets,   // all proper subsets of M
  DualHorn,  // one unsatisfiability test per atom of M; dual Horn programs only
};

namespace detail {

inline bool proper_rules_single_headed(const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const Rule& r) { return r.is_constraint() || distinct(r.head).size() == 1; });
}

inline bool proper_rules_dual_horn(const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const Rule& r) { return r.is_constraint() || distinct(r.pos).size() <= 1; });
}

// Assumes m is a model of the proper rules `sp`.
inline bool minimal_by_subsets(const Program& sp, const Interpretation& m, const Caps& caps) {
  const auto members = m.atoms();
  if (members.size() > caps.minimality)
    throw OracleLimitExceeded("minimality check over " + std::to_string(members.size()) +
                              " atoms exceeds cap " + std::to_string(caps.minimality));
  const std::uint64_t full = (std::uint64_t{1} << members.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    Interpretation sub;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask >> i & 1u) sub.insert(members[i]);
    if (is_model(sp, sub)) return false;
  }
  return true;
}

// M is minimal iff for each a in M the program plus "<- a" and "<- b" for
// every b outside M has no model; each such program is dual Horn.
inline bool minimal_by_dual_horn(const Program& sp, const Interpretation& m) {
  const Interpretation universe = atoms_of(sp) | m;
  const Interpretation outside = universe - m;
  for (auto a : m.atoms()) {
    Interpretation forced = outside;
    forced.insert(a);
    if (dual_horn_greatest_model(sp, universe, forced)) return false;
  }
  return true;
}

}  // namespace detail

/// M is a minimal model of the positive program p.
inline bool is_minimal_model(const Program& p, const Interpretation& m, const Caps& caps = {},
                             MinimalityCheck method = MinimalityCheck::Auto) {
  if (!is_positive(p)) throw NotPositive("minimality is defined here for positive programs only");
  if (!is_model(p, m)) return false;
  // Positive constraints hold in every subset of a model, so only proper rules matter.
  const Program sp = proper_part(p);
  switch (method) {
    case MinimalityCheck::Subsets:
      return detail::minimal_by_subsets(sp, m, caps);
    case MinimalityCheck::DualHorn:
      if (!detail::proper_rules_dual_horn(sp))
        throw EngineMismatch("dual Horn minimality test needs at most one body atom per rule");
      return detail::minimal_by_dual_horn(sp, m);
    case MinimalityCheck::Auto:
      break;
  }
  if (detail::proper_rules_single_headed(sp)) return detail::least_model(sp) == m;
  if (detail::proper_rules_dual_horn(sp)) return detail::minimal_by_dual_horn(sp, m);
  return detail::minimal_by_subsets(sp, m, caps);
}

/// Answer set of the proper part plus a model of the constraints.
inline bool is_answer_set(const Program& p, const Interpretation& m, const Caps& caps = {},
                          MinimalityCheck method = MinimalityCheck::Auto) {
  const auto [proper, constraints] = split(p);
  if (!is_model(constraints, m)) return false;
  return is_minimal_model(reduct(proper, m), m, caps, method);
}

/// H(P,M): one head-only rule per M-applicable proper rule.
inline Program heads_applicable(const Program& p, const Interpretation& m) {
  std::vector<Rule> out;
  for (const auto& r : p.rules())
    if (!r.is_constraint() && body_holds(m, r)) out.push_back(Rule{r.head, {}, {}});
  return p.with_rules(std::move(out));
}

/// Every atom of M is the only M-atom in the head of some M-applicable rule.
/// Necessary for supportedness, never used as the decision.
inline bool has_unique_support(const Program& h, const Interpretation& m) {
  Interpretation supported;
  for (const auto& r : h.rules()) {
    std::optional<Atom> only;
    bool several = false;
    for (auto a : detail::distinct(r.head)) {
      if (!m.contains(a)) continue;
      if (only) several = true;
      only = a;
    }
    if (only && !several) supported.insert(*only);
  }
  return m.subset_of(supported);
}

inline bool is_supported_model(const Program& p, const Interpretation& m, const Caps& caps = {},
                               MinimalityCheck method = MinimalityCheck::Auto) {
  if (!is_model(constraint_part(p), m)) return false;
  const Program h = heads_applicable(p, m);
  if (!has_unique_support(h, m)) return false;
  return is_minimal_model(h, m, caps, method);
}

inline bool check(const Program& p, const Interpretation& m, SemanticsKind kind, const Caps& caps = {}) {
  return kind == SemanticsKind::AnswerSet ? is_answer_set(p, m, caps) : is_supported_model(p, m, caps);
}

/// All answer sets or supported models, by exhausting the subsets of At(p).
/// Sorted by lex_less.
inline std::vector<Interpretation> enumerate(const Program& p, SemanticsKind kind, const Caps& caps = {}) {
  const auto universe = atoms_of(p).atoms();
  if (universe.size() > caps.enumeration)
    throw OracleLimitExceeded("enumeration over " + std::to_string(universe.size()) + " atoms exceeds cap " +
                              std::to_string(caps.enumeration));
  std::vector<Interpretation> out;
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Interpretation m;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1u) m.insert(universe[i]);
    if (!is_model(p, m)) continue;
    if (check(p, m, kind, caps)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace arity_asp
