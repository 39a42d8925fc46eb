#pragma once

// Complexity classification of the six reasoning tasks from the arity set
// that defines a program class. Each task has an ordered clause table; the
// first clause whose target dominates the (normalized) arity set decides the
// label, and the trailing "otherwise" clause catches everything else.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arity.hpp"
#include "engines.hpp"
#include "errors.hpp"

namespace arity_asp {

enum class TaskKind { Eas, CredNeg, SkepNeg, Espm, SuppCredNeg, SuppSkepNeg };

inline constexpr TaskKind kAllTasks[] = {TaskKind::Eas,  TaskKind::CredNeg,     TaskKind::SkepNeg,
                                         TaskKind::Espm, TaskKind::SuppCredNeg, TaskKind::SuppSkepNeg};

inline std::string_view to_string(TaskKind t) {
  switch (t) {
    case TaskKind::Eas: return "EAS";
    case TaskKind::CredNeg: return "CRED_NEG";
    case TaskKind::SkepNeg: return "SKEP_NEG";
    case TaskKind::Espm: return "ESPM";
    case TaskKind::SuppCredNeg: return "SUPP_CRED_NEG";
    case TaskKind::SuppSkepNeg: return "SUPP_SKEP_NEG";
  }
  return "?";
}

/// Short names used on the command line.
inline std::string_view cli_name(TaskKind t) {
  switch (t) {
    case TaskKind::Eas: return "eas";
    case TaskKind::CredNeg: return "cred";
    case TaskKind::SkepNeg: return "skep";
    case TaskKind::Espm: return "espm";
    case TaskKind::SuppCredNeg: return "scred";
    case TaskKind::SuppSkepNeg: return "sskep";
  }
  return "?";
}

inline std::optional<TaskKind> task_from_cli_name(std::string_view s) {
  for (auto t : kAllTasks)
    if (cli_name(t) == s) return t;
  return std::nullopt;
}

/// Entailment tasks take a query atom; existence tasks do not.
inline bool needs_query_atom(TaskKind t) { return t != TaskKind::Eas && t != TaskKind::Espm; }

struct Task {
  TaskKind kind = TaskKind::Eas;
  std::optional<std::string> atom;

  static Task make(TaskKind kind, std::optional<std::string> atom = std::nullopt) {
    if (needs_query_atom(kind) && !atom)
      throw PreconditionError(std::string(to_string(kind)) + " needs a query atom");
    if (!needs_query_atom(kind) && atom)
      throw PreconditionError(std::string(to_string(kind)) + " takes no query atom");
    return Task{kind, std::move(atom)};
  }
};

enum class Label { PTime, NpComplete, CoNpComplete, Sigma2PComplete, Pi2PComplete };

inline std::string_view to_string(Label l) {
  switch (l) {
    case Label::PTime: return "P";
    case Label::NpComplete: return "NP-complete";
    case Label::CoNpComplete: return "coNP-complete";
    case Label::Sigma2PComplete: return "Sigma2P-complete";
    case Label::Pi2PComplete: return "Pi2P-complete";
  }
  return "?";
}

/// 0 for P, 1 for the first level, 2 for the second.
inline int level(Label l) {
  switch (l) {
    case Label::PTime: return 0;
    case Label::NpComplete:
    case Label::CoNpComplete: return 1;
    case Label::Sigma2PComplete:
    case Label::Pi2PComplete: return 2;
  }
  return 2;
}

struct ComplexityVerdict {
  Label label = Label::Sigma2PComplete;
  std::string condition;
  Engine engine = Engine::SearchSigma2;

  friend bool operator==(const ComplexityVerdict&, const ComplexityVerdict&) = default;
};

struct ConditionRow {
  enum class Test {
    Dominated,        // d is dominated by target
    NoBodyFreeProper, // d has no [k,0,m] with k >= 1 (explicit schema only)
    Otherwise,
  };
  std::string id;
  Test test = Test::Dominated;
  AritySet target;
  Label label = Label::PTime;
  Engine engine = Engine::SearchNp;
};

namespace detail {

inline ConditionRow dominated(std::string id, AritySet target, Label label, Engine engine) {
  return {std::move(id), ConditionRow::Test::Dominated, std::move(target), label, engine};
}

inline ConditionRow otherwise(std::string id, Label label, Engine engine) {
  return {std::move(id), ConditionRow::Test::Otherwise, {}, label, engine};
}

// The P / NP / Sigma2P trichotomy for answer-set existence, shared by the
// implicit and explicit schemas.
inline std::vector<ConditionRow> existence_rows(const std::string& prefix) {
  using namespace classes;
  return {
      dominated(prefix + ".A1", kEasPositiveProper, Label::PTime, Engine::EasPositiveProper),
      dominated(prefix + ".A2", kEasHorn, Label::PTime, Engine::EasHorn),
      dominated(prefix + ".A3", kDualHorn, Label::PTime, Engine::EasDualHorn),
      dominated(prefix + ".A4", kTwoLiteral, Label::PTime, Engine::EasTwoLiteral),
      dominated(prefix + ".B1", kNormal, Label::NpComplete, Engine::SearchNp),
      dominated(prefix + ".B2", kDualHornReducts, Label::NpComplete, Engine::SearchNp),
      dominated(prefix + ".B3", kPositive, Label::NpComplete, Engine::SearchNp),
      otherwise(prefix + ".C", Label::Sigma2PComplete, Engine::SearchSigma2),
  };
}

}  // namespace detail

/// The ordered clause list classify() evaluates for a task and schema.
inline std::vector<ConditionRow> condition_table(TaskKind task, Schema schema = Schema::Implicit) {
  using namespace classes;
  using detail::dominated;
  using detail::otherwise;
  if (schema == Schema::Explicit) {
    if (task != TaskKind::Eas) throw SchemaError("explicit arity sets are classified for EAS only");
    auto rows = detail::existence_rows("ex");
    rows.insert(rows.begin(), ConditionRow{"ex.precheck", ConditionRow::Test::NoBodyFreeProper, {}, Label::PTime,
                                           Engine::EasEmptyCandidate});
    return rows;
  }
  switch (task) {
    case TaskKind::Eas:
      return detail::existence_rows("main");
    case TaskKind::CredNeg:
      return {
          dominated("cr.A1", kEasHorn, Label::PTime, Engine::EasHorn),
          dominated("cr.A2", kDualHorn, Label::PTime, Engine::EasDualHorn),
          dominated("cr.A3", kTwoLiteral, Label::PTime, Engine::EasTwoLiteral),
          dominated("cr.B1", kNormal, Label::NpComplete, Engine::SearchNp),
          dominated("cr.B2", kDualHornReducts, Label::NpComplete, Engine::SearchNp),
          dominated("cr.B3", kPositive, Label::NpComplete, Engine::SearchNp),
          otherwise("cr.C", Label::Sigma2PComplete, Engine::SearchSigma2),
      };
    case TaskKind::SkepNeg:
      return {
          dominated("sk.A", kEasHorn, Label::PTime, Engine::EasHorn),
          dominated("sk.B1", kNormal, Label::CoNpComplete, Engine::SearchNp),
          dominated("sk.B2", kDualHornReducts, Label::CoNpComplete, Engine::SearchNp),
          otherwise("sk.C", Label::Pi2PComplete, Engine::SearchSigma2),
      };
    case TaskKind::Espm:
      return {
          dominated("supp.1", kSuppFacts, Label::PTime, Engine::SuppFacts),
          dominated("supp.2", kEasPositiveProper, Label::PTime, Engine::SuppModelExists),
          dominated("supp.3", kDualHorn, Label::PTime, Engine::SuppModelExists),
          dominated("supp.4", kSuppHornPositiveConstraints, Label::PTime, Engine::SuppModelExists),
          dominated("supp.5", kSuppTwoLiteral, Label::PTime, Engine::SuppModelExists),
          dominated("supp.6", kSuppHornNegativeConstraints, Label::PTime, Engine::SuppHornGfp),
          dominated("supp.7", kSuppRewrite, Label::PTime, Engine::SuppRewrite),
          otherwise("supp.otherwise", Label::NpComplete, Engine::SearchNp),
      };
    case TaskKind::SuppCredNeg:
      return {
          dominated("scr.1", kSuppFacts, Label::PTime, Engine::SuppFacts),
          dominated("scr.2", kDualHorn, Label::PTime, Engine::SuppModelExists),
          dominated("scr.3", kSuppHornPositiveConstraints, Label::PTime, Engine::SuppModelExists),
          dominated("scr.4", kSuppTwoLiteral, Label::PTime, Engine::SuppModelExists),
          dominated("scr.5", kSuppRewrite, Label::PTime, Engine::SuppRewrite),
          otherwise("scr.otherwise", Label::NpComplete, Engine::SearchNp),
      };
    case TaskKind::SuppSkepNeg:
      return {
          dominated("ssk.1", kSuppFacts, Label::PTime, Engine::SuppFacts),
          dominated("ssk.2", kSuppHornNegativeConstraints, Label::PTime, Engine::SuppHornGfp),
          dominated("ssk.3", kSuppRewrite, Label::PTime, Engine::SuppRewrite),
          dominated("ssk.4", kSuppSkepCycle, Label::PTime, Engine::SuppSkepCycle),
          otherwise("ssk.otherwise", Label::CoNpComplete, Engine::SearchNp),
      };
  }
  throw SchemaError("unknown task");
}

inline bool has_body_free_proper_arity(const AritySet& d) {
  for (const auto& a : d.elements())
    if (a.k >= ExtNat(1) && a.m == ExtNat(0)) return true;
  return false;
}

/// Label, first matching clause and recommended engine for (task, d).
inline ComplexityVerdict classify(TaskKind task, const AritySet& d) {
  if (d.schema() == Schema::Explicit) {
    if (task != TaskKind::Eas) throw SchemaError("explicit arity sets are classified for EAS only");
    for (const auto& a : d.elements())
      if (a.is_superarity()) throw InvalidAritySet("explicit arity sets cannot contain superarity " + a.str());
  }
  const AritySet input = d.schema() == Schema::Implicit ? normalize(d) : d;
  for (const auto& row : condition_table(task, d.schema())) {
    bool hit = false;
    switch (row.test) {
      case ConditionRow::Test::Dominated: hit = preceq_set(input, row.target); break;
      case ConditionRow::Test::NoBodyFreeProper: hit = !has_body_free_proper_arity(input); break;
      case ConditionRow::Test::Otherwise: hit = true; break;
    }
    if (hit) return {row.label, row.id, row.engine};
  }
  throw SchemaError("condition table without a residual clause");
}

inline std::string describe(const ComplexityVerdict& v) {
  return std::string(to_string(v.label)) + " (" + v.condition + ", engine=" + std::string(to_string(v.engine)) + ")";
}

}  // namespace arity_asp
