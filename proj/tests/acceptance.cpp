// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "arity_asp/semantics.hpp"
#include "golden.hpp"
#include "harness.hpp"

using namespace arity_asp;
using harness::Tally;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ArityTriple random_triple(std::mt19937_64& rng) {
  auto pick = [&] { return rng() % 5 == 4 ? kInf : ExtNat(static_cast<std::uint32_t>(rng() % 4)); };
  return {pick(), pick(), pick()};
}

AritySet random_set(std::mt19937_64& rng) {
  std::vector<ArityTriple> xs;
  const auto size = 1 + rng() % 5;
  for (std::size_t i = 0; i < size; ++i) xs.push_back(random_triple(rng));
  return AritySet(xs);
}

Tally golden_table() {
  Tally t;
  for (const auto& row : golden::rows()) {
    ++t.checked;
    const auto v = classify(row.task, row.d);
    if (v.label != row.label || v.condition != row.condition)
      t.fail(std::string(to_string(row.task)) + " " + row.d.str() + " gave " + describe(v));
  }
  // Each of the seven polynomial conditions for supported-model existence.
  for (const auto& row : condition_table(TaskKind::Espm)) {
    if (row.test != ConditionRow::Test::Dominated) continue;
    ++t.checked;
    const auto v = classify(TaskKind::Espm, row.target);
    if (v.condition != row.id || v.label != Label::PTime) t.fail("ESPM " + row.target.str() + " gave " + describe(v));
  }
  return t;
}

Tally engines() {
  Tally t;
  for (const auto& c : harness::engine_cases())
    t += harness::engine_vs_oracle(c, 500, 0xACCE55 + static_cast<unsigned>(c.engine) * 131 + t.checked);
  return t;
}

Tally gadgets() {
  Tally t;
  for (int c = 1; c <= 4; ++c) t += harness::sat_shape_equivalence(c);
  t += harness::eas_R_equivalence();
  t += harness::supported_gadget_equivalence(7);
  t += harness::supported_gadget_equivalence(8);
  t += harness::pad_equivalence(300, 61);
  t += harness::fold_equivalence(300, 62);
  t += harness::chain_equivalence(300, 63);
  return t;
}

Tally order_laws(std::mt19937_64& rng) {
  Tally t;
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_triple(rng), b = random_triple(rng), c = random_triple(rng);
    ++t.checked;
    if (!preceq(a, a)) t.fail("reflexivity fails at " + a.str());
    if (preceq(a, b) && preceq(b, a) && a != b) t.fail("antisymmetry fails at " + a.str() + ", " + b.str());
    if (preceq(a, b) && preceq(b, c) && !preceq(a, c))
      t.fail("transitivity fails at " + a.str() + ", " + b.str() + ", " + c.str());
  }
  return t;
}

Tally normalize_laws(std::mt19937_64& rng) {
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_set(rng);
    const auto n = normalize(d);
    ++t.checked;
    if (!is_antichain(n)) t.fail("not an antichain: normalize " + d.str());
    if (!preceq_set(d, n) || !preceq_set(n, d)) t.fail("class changed: normalize " + d.str());
    for (int j = 0; j < 20; ++j) {
      const auto x = random_triple(rng);
      if (preceq(x, d) != preceq(x, n)) t.fail("membership differs for " + x.str() + " in " + d.str());
    }
    const auto p = harness::random_program(d, rng, 5);
    if (!member(p, d) || !member(p, n)) t.fail("program membership differs for " + d.str());
    for (auto task : kAllTasks)
      if (!(classify(task, d) == classify(task, n))) t.fail("classify changed by normalize: " + d.str());
  }
  return t;
}

Tally semantics_laws(std::mt19937_64& rng) {
  static const AritySet kAnything{{3, 3, 3}, {0, 3, 3}};
  static const AritySet kNegative{{3, 0, 3}, {0, 3, 3}};
  Tally t;
  for (int i = 0; i < 1000; ++i) {
    const bool negative = i % 4 == 3;
    const auto p = harness::random_program(negative ? kNegative : kAnything, rng, 8);
    const auto where = harness::show(p);
    ++t.checked;
    const auto o = oracle::from_program(p);
    const auto [proper, constraints] = split(p);
    for (oracle::Mask mask = 0;; ++mask) {
      Interpretation m;
      for (std::size_t k = 0; k < o.atoms.size(); ++k)
        if (mask >> k & 1u) m.insert(*p.table().find(o.atoms[k]));
      const bool whole = is_answer_set(p, m);
      if (whole != (is_answer_set(proper, m) && is_model(constraints, m)))
        t.fail("decomposition fails on\n" + where);
      if (whole != oracle::answer_set(o, mask)) t.fail("answer-set check differs from reference on\n" + where);
      if (mask == oracle::full(o)) break;
    }
    const auto as = enumerate(p, SemanticsKind::AnswerSet);
    const auto sm = enumerate(p, SemanticsKind::Supported);
    for (const auto& m : as) {
      if (!is_model(p, m)) t.fail("answer set is not a model on\n" + where);
      if (!is_supported_model(p, m)) t.fail("answer set is not supported on\n" + where);
      for (const auto& other : as)
        if (!(other == m) && other.subset_of(m)) t.fail("answer sets are not an antichain on\n" + where);
    }
    if (negative && as != sm) t.fail("purely negative program: supported models differ on\n" + where);
  }
  return t;
}

Tally structural() {
  std::mt19937_64 rng(0x5EED);
  Tally t = order_laws(rng);
  t += normalize_laws(rng);
  t += semantics_laws(rng);
  return t;
}

Tally sanity_vector() {
  Tally t;
  auto expect = [&](const char* text, SemanticsKind kind, std::set<std::set<std::string>> want) {
    ++t.checked;
    const auto p = parse_program(text);
    std::set<std::set<std::string>> got;
    for (const auto& m : enumerate(p, kind)) got.insert(oracle::names(p, m));
    if (got != want) t.fail(std::string("enumerate differs on ") + text);
  };
  expect("a | b.", SemanticsKind::AnswerSet, {{"a"}, {"b"}});
  expect("a :- a.", SemanticsKind::Supported, {{}, {"a"}});
  expect("a :- not a.", SemanticsKind::AnswerSet, {});
  return t;
}

Tally residual() {
  const auto a = golden::residual_agreement();
  Tally t;
  t.checked = a.checked;
  if (a.mismatched) t.fail(std::to_string(a.mismatched) + " mismatches, first at " + a.first_mismatch);
  return t;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Tally()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden classification table", 1.0, golden_table},
      {2, "polynomial engines agree with enumeration", 120.0, engines},
      {3, "reductions preserve decisions", 300.0, gadgets},
      {4, "structural invariants", 600.0, structural},
      {5, "semantics sanity vector", 1.0, sanity_vector},
      {6, "second-level trigger matches the clause list", 600.0, residual},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    const bool within = secs <= c.budget_seconds;
    const bool pass = t.ok() && within;
    all &= pass;
    std::printf("criterion %d: %s %s (%zu checked, %zu failed, %.2fs)\n", c.id, pass ? "PASS" : "FAIL", c.title,
                t.checked, t.failed, secs);
    if (!within) std::printf("  over the %.0fs budget\n", c.budget_seconds);
    if (t.failed) std::cout << "  first failure: " << t.first_failure << "\n";
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
