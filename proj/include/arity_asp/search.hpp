#pragma once

// Guess-and-check search for the NP-level classes, exhaustive search for the
// general case, and decide(), which routes a task on a concrete program to
// the cheapest engine its arity profile admits.
//
// Both searches walk candidate interpretations in lexicographic order of
// their sorted atom-id sequences (preorder over increasing sequences), so the
// first accepted candidate is the lex-least witness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "engines.hpp"
#include "errors.hpp"
#include "program.hpp"
#include "semantics.hpp"

namespace arity_asp {

namespace detail {

// Atoms that may be true in an answer set or supported model: both are
// covered by the heads of proper rules.
inline std::vector<Atom> head_atoms(const Program& p) {
  std::vector<Atom> out;
  for (const auto& r : p.rules())
    if (!r.is_constraint()) out.insert(out.end(), r.head.begin(), r.head.end());
  return distinct(std::move(out));
}

// Preorder walk over increasing subsequences of `universe`. A subtree is cut
// once some rule is already violated by every completion: its body is
// settled true (positive atoms chosen, negative atoms settled false) and each
// head atom is settled false. An atom is settled false when it lies outside
// the universe or before the last chosen position without being chosen.
class LexSearch {
 public:
  LexSearch(const Program& p, std::vector<Atom> universe) : p_(p), universe_(std::move(universe)) {
    std::size_t n = atom_bound(p);
    for (auto a : universe_) n = std::max<std::size_t>(n, a.id + 1);
    position_.assign(n, SIZE_MAX);
    for (std::size_t i = 0; i < universe_.size(); ++i) position_[universe_[i].id] = i;
  }

  std::optional<Interpretation> first(const std::function<bool(const Interpretation&)>& accept) {
    Interpretation current;
    return walk(current, 0, accept);
  }

 private:
  bool settled_false(Atom a, const Interpretation& current, std::size_t next) const {
    if (current.contains(a)) return false;
    const auto pos = a.id < position_.size() ? position_[a.id] : SIZE_MAX;
    return pos == SIZE_MAX || pos < next;
  }

  bool doomed(const Interpretation& current, std::size_t next) const {
    for (const auto& r : p_.rules()) {
      if (!std::all_of(r.pos.begin(), r.pos.end(), [&](Atom a) { return current.contains(a); })) continue;
      if (!std::all_of(r.neg.begin(), r.neg.end(), [&](Atom a) { return settled_false(a, current, next); }))
        continue;
      if (std::all_of(r.head.begin(), r.head.end(), [&](Atom a) { return settled_false(a, current, next); }))
        return true;
    }
    return false;
  }

  std::optional<Interpretation> walk(Interpretation& current, std::size_t next,
                                     const std::function<bool(const Interpretation&)>& accept) {
    if (doomed(current, next)) return std::nullopt;
    if (accept(current)) return current;
    for (std::size_t i = next; i < universe_.size(); ++i) {
      current.insert(universe_[i]);
      auto found = walk(current, i + 1, accept);
      current.erase(universe_[i]);
      if (found) return found;
    }
    return std::nullopt;
  }

  const Program& p_;
  std::vector<Atom> universe_;
  std::vector<std::size_t> position_;
};

}  // namespace detail

struct SearchResult {
  bool answer = false;
  std::optional<Interpretation> witness;
};

/// NP-level existence search. For answer sets the program must be normal,
/// have dual Horn reducts, or be positive, so each candidate check is
/// polynomial; supported models need no class restriction.
inline SearchResult solve_np(const Program& p, SemanticsKind kind, const Caps& caps = {}) {
  if (kind == SemanticsKind::Supported) {
    detail::LexSearch search(p, detail::head_atoms(p));
    auto m = search.first([&](const Interpretation& c) { return is_supported_model(p, c, caps); });
    return {m.has_value(), std::move(m)};
  }
  if (member(p, classes::kNormal) || member(p, classes::kDualHornReducts)) {
    detail::LexSearch search(p, detail::head_atoms(p));
    auto m = search.first([&](const Interpretation& c) { return is_answer_set(p, c, caps); });
    return {m.has_value(), std::move(m)};
  }
  if (member(p, classes::kPositive)) {
    // A positive program has an answer set iff it has a model; the witness is
    // a minimal model of the proper part below the first model found.
    detail::LexSearch search(p, detail::head_atoms(p));
    auto m = search.first([&](const Interpretation& c) { return is_model(p, c); });
    if (!m) return {false, std::nullopt};
    return {true, detail::witness_by_subsets(proper_part(p), *m, caps, WitnessMode::BestEffort)};
  }
  throw EngineMismatch("solve_np: answer-set checking is not polynomial for profile " + profile(p).str());
}

/// Exhaustive answer-set existence with full subset-minimality checks.
inline SearchResult solve_sigma2(const Program& p, const Caps& caps = {}) {
  const auto n = atoms_of(p).size();
  if (n > caps.enumeration)
    throw OracleLimitExceeded("exhaustive search over " + std::to_string(n) + " atoms exceeds cap " +
                              std::to_string(caps.enumeration));
  detail::LexSearch search(p, detail::head_atoms(p));
  auto m = search.first([&](const Interpretation& c) { return is_answer_set(p, c, caps); });
  return {m.has_value(), std::move(m)};
}

struct Decision {
  bool answer = false;
  std::optional<Interpretation> witness;  // for skeptical tasks: a counterexample
  Engine engine_used = Engine::Oracle;
  ComplexityVerdict verdict;
};

namespace detail {

struct Routed {
  bool answer;
  std::optional<Interpretation> witness;
  Engine engine;
};

inline Routed answer_set_exists(const Program& q, const Caps& caps) {
  const auto v = classify(TaskKind::Eas, profile(q));
  if (is_poly_engine(v.engine)) {
    auto r = eas_poly(q, v.engine, caps);
    return {r.answer, std::move(r.witness), v.engine};
  }
  auto r = v.engine == Engine::SearchNp ? solve_np(q, SemanticsKind::AnswerSet, caps) : solve_sigma2(q, caps);
  return {r.answer, std::move(r.witness), v.engine};
}

inline Routed supported_model_exists(const Program& q, const Caps& caps) {
  const auto v = classify(TaskKind::Espm, profile(q));
  if (is_poly_engine(v.engine)) {
    auto r = espm_poly(q, v.engine, caps);
    return {r.answer, std::move(r.witness), v.engine};
  }
  auto r = solve_np(q, SemanticsKind::Supported, caps);
  return {r.answer, std::move(r.witness), v.engine};
}

inline Program with_constraint(Program p, const std::string& atom, bool negated) {
  const Atom a = p.intern(atom);
  if (negated) p.add(Rule{{}, {}, {a}});
  else p.add(Rule{{}, {a}, {}});
  return p;
}

}  // namespace detail

/// Decide a task on a concrete program. Entailment tasks are reduced to
/// existence on P plus "<- a" (credulous) or "<- not a" (skeptical, answered
/// as the complement); the augmented program is classified again to pick the
/// engine.
inline Decision decide(const Task& task, const Program& p, const Caps& caps = {}) {
  if (needs_query_atom(task.kind) != task.atom.has_value())
    throw PreconditionError(std::string(to_string(task.kind)) +
                            (task.atom ? " takes no query atom" : " needs a query atom"));
  Decision d;
  d.verdict = classify(task.kind, profile(p));
  auto take = [&](detail::Routed r, bool complement) {
    d.answer = complement ? !r.answer : r.answer;
    d.witness = std::move(r.witness);
    d.engine_used = r.engine;
  };
  switch (task.kind) {
    case TaskKind::Eas:
      take(detail::answer_set_exists(p, caps), false);
      break;
    case TaskKind::CredNeg:
      take(detail::answer_set_exists(detail::with_constraint(p, *task.atom, false), caps), false);
      break;
    case TaskKind::SkepNeg:
      take(detail::answer_set_exists(detail::with_constraint(p, *task.atom, true), caps), true);
      break;
    case TaskKind::Espm:
      take(detail::supported_model_exists(p, caps), false);
      break;
    case TaskKind::SuppCredNeg:
      take(detail::supported_model_exists(detail::with_constraint(p, *task.atom, false), caps), false);
      break;
    case TaskKind::SuppSkepNeg:
      if (d.verdict.engine == Engine::SuppSkepCycle) {
        Program q = p;
        const Atom a = q.intern(*task.atom);
        auto counterexample = supp_skeptical_counterexample(q, a);
        d.answer = !counterexample;
        d.witness = std::move(counterexample);
        d.engine_used = Engine::SuppSkepCycle;
      } else {
        take(detail::supported_model_exists(detail::with_constraint(p, *task.atom, true), caps), true);
      }
      break;
  }
  return d;
}

}  // namespace arity_asp
