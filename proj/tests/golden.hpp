#pragma once

// Reference classifications for concrete arity classes, and the closed-form
// description of when answer-set existence reaches the second level.

#include <string>
#include <vector>

#include "arity_asp/classifier.hpp"

namespace golden {

using namespace arity_asp;

struct Row {
  TaskKind task;
  AritySet d;
  Label label;
  std::string condition;
};

inline std::vector<Row> rows() {
  return {
      {TaskKind::Eas, {{1, kInf, kInf}, {0, kInf, kInf}}, Label::NpComplete, "main.B1"},
      {TaskKind::Eas, {{kInf, 1, kInf}, {0, kInf, kInf}}, Label::NpComplete, "main.B2"},
      {TaskKind::Eas, {{kInf, kInf, 0}, {0, kInf, 0}}, Label::NpComplete, "main.B3"},
      {TaskKind::Eas, {{1, kInf, 0}, {0, kInf, kInf}}, Label::PTime, "main.A2"},
      {TaskKind::Eas, {{kInf, 1, 0}, {0, 1, 0}}, Label::PTime, "main.A3"},
      {TaskKind::Eas, {{2, 0, 0}, {1, 2, 0}, {0, 0, 1}}, Label::Sigma2PComplete, "main.C"},
      {TaskKind::Eas, {{2, 0, 0}, {1, 2, 0}, {1, 0, 1}}, Label::Sigma2PComplete, "main.C"},
      // [1,inf,0] is also below the positive-proper target, which is listed first.
      {TaskKind::Eas, {{1, kInf, 0}}, Label::PTime, "main.A1"},
      {TaskKind::Eas, {{1, 1, 1}}, Label::NpComplete, "main.B1"},
      {TaskKind::SkepNeg, {{2, 0, 0}}, Label::CoNpComplete, "sk.B2"},
      {TaskKind::CredNeg, {{2, 0, 0}}, Label::PTime, "cr.A2"},
      {TaskKind::Espm, {{1, 0, 1}}, Label::NpComplete, "supp.otherwise"},
      {TaskKind::Espm, {{1, 0, 0}, {0, kInf, kInf}}, Label::PTime, "supp.1"},
      {TaskKind::Espm, {{kInf, kInf, 0}, {0, 0, 0}}, Label::PTime, "supp.2"},
      {TaskKind::Espm, {{kInf, 1, 0}, {0, 1, 0}}, Label::PTime, "supp.3"},
      {TaskKind::Espm, {{1, kInf, 0}, {0, kInf, 0}}, Label::PTime, "supp.4"},
      {TaskKind::Espm, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}, Label::PTime, "supp.5"},
      {TaskKind::Espm, {{1, kInf, 0}, {0, 0, kInf}}, Label::PTime, "supp.6"},
      {TaskKind::Espm, {{1, 1, 0}, {0, 1, kInf}}, Label::PTime, "supp.7"},
      {TaskKind::SuppSkepNeg, {{1, 1, 0}, {0, kInf, 0}}, Label::PTime, "ssk.4"},
      {TaskKind::Eas, AritySet({{1, 1, 1}}, Schema::Explicit), Label::PTime, "ex.precheck"},
  };
}

/// Answer-set existence is at the second level exactly when {[2,0,0]},
/// {[1,2,0]} and one of {[0,0,1]}, {[1,0,1]} are all dominated by d.
inline bool second_level_trigger(const AritySet& d) {
  auto below = [&](ArityTriple t) { return preceq_set(AritySet{t}, d); };
  return below({2, 0, 0}) && below({1, 2, 0}) && (below({0, 0, 1}) || below({1, 0, 1}));
}

/// Every triple with components in {0,1,2,3,inf}.
inline std::vector<ArityTriple> small_triples() {
  const ExtNat values[] = {ExtNat(0), ExtNat(1), ExtNat(2), ExtNat(3), kInf};
  std::vector<ArityTriple> out;
  for (auto k : values)
    for (auto m : values)
      for (auto n : values) out.push_back({k, m, n});
  return out;
}

struct Agreement {
  std::size_t checked = 0;
  std::size_t mismatched = 0;
  std::string first_mismatch;
};

/// Compares the closed-form second-level trigger with classify() on every
/// set of at most three small triples; `stride` > 1 samples every stride-th set.
inline Agreement residual_agreement(std::size_t stride = 1) {
  const auto xs = small_triples();
  const std::size_t n = xs.size();
  Agreement a;
  std::size_t index = 0;
  auto check = [&](std::initializer_list<ArityTriple> elems) {
    if (index++ % stride != 0) return;
    const AritySet d(elems);
    ++a.checked;
    const bool by_table = classify(TaskKind::Eas, d).label == Label::Sigma2PComplete;
    if (by_table != second_level_trigger(d) && a.mismatched++ == 0) a.first_mismatch = d.str();
  };
  check({});
  for (std::size_t i = 0; i < n; ++i) {
    check({xs[i]});
    for (std::size_t j = i + 1; j < n; ++j) {
      check({xs[i], xs[j]});
      for (std::size_t k = j + 1; k < n; ++k) check({xs[i], xs[j], xs[k]});
    }
  }
  return a;
}

}  // namespace golden
