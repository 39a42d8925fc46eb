#include <catch_amalgamated.hpp>

#include "harness.hpp"

using namespace arity_asp;

namespace {

using Names = std::set<std::string>;

Names witness_names(const Program& p, const std::optional<Interpretation>& m) {
  REQUIRE(m.has_value());
  return oracle::names(p, *m);
}

Decision run(TaskKind kind, const char* text, std::optional<std::string> atom = std::nullopt) {
  return decide(Task::make(kind, std::move(atom)), parse_program(text));
}

// Expected answer of a task from the full answer-set / supported-model families.
bool expected(TaskKind kind, const Program& p, const std::string& atom) {
  auto family = [&](bool supported) {
    return supported ? oracle::supported_names(p) : oracle::answer_set_names(p);
  };
  switch (kind) {
    case TaskKind::Eas: return !family(false).empty();
    case TaskKind::Espm: return !family(true).empty();
    case TaskKind::CredNeg:
    case TaskKind::SuppCredNeg:
      for (const auto& m : family(kind == TaskKind::SuppCredNeg))
        if (!m.contains(atom)) return true;
      return false;
    case TaskKind::SkepNeg:
    case TaskKind::SuppSkepNeg:
      for (const auto& m : family(kind == TaskKind::SuppSkepNeg))
        if (m.contains(atom)) return false;
      return true;
  }
  return false;
}

const std::vector<AritySet>& profiles() {
  using namespace classes;
  static const std::vector<AritySet> all{
      AritySet{{3, 3, 3}, {0, 3, 3}},
      kNormal,
      kDualHornReducts,
      kPositive,
      kEasPositiveProper,
      kEasHorn,
      kDualHorn,
      kTwoLiteral,
      kSuppFacts,
      kSuppHornNegativeConstraints,
      kSuppRewrite,
      kSuppSkepCycle,
      AritySet{{2, 0, 0}, {1, 2, 0}, {0, 0, 1}},
  };
  return all;
}

}  // namespace

TEST_CASE("solve_np examples") {
  const auto p = parse_program("a :- not b. b :- not a. :- a.");
  const auto r = solve_np(p, SemanticsKind::AnswerSet);
  CHECK(r.answer);
  CHECK(witness_names(p, r.witness) == Names{"b"});
  CHECK_FALSE(solve_np(parse_program("a :- not a."), SemanticsKind::AnswerSet).answer);
  const auto s = parse_program("x :- x. :- not x.");
  const auto rs = solve_np(s, SemanticsKind::Supported);
  CHECK(rs.answer);
  CHECK(witness_names(s, rs.witness) == Names{"x"});
  CHECK_THROWS_AS(solve_np(parse_program("a | b :- not c, d, e."), SemanticsKind::AnswerSet), EngineMismatch);
}

TEST_CASE("solve_sigma2 examples") {
  const auto p = parse_program("a | b. :- not a.");
  const auto r = solve_sigma2(p);
  CHECK(r.answer);
  CHECK(witness_names(p, r.witness) == Names{"a"});
  CHECK_FALSE(solve_sigma2(parse_program("a | b. :- a. :- b.")).answer);
  const auto e = solve_sigma2(Program{});
  CHECK(e.answer);
  CHECK(e.witness->empty());
  Caps caps;
  caps.enumeration = 2;
  CHECK_THROWS_AS(solve_sigma2(parse_program("a | b | c."), caps), OracleLimitExceeded);
}

TEST_CASE("search witnesses are lex-least") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto p = harness::random_program(i % 2 ? classes::kNormal : AritySet{{3, 3, 3}, {0, 3, 3}}, rng, 8);
    const auto all = enumerate(p, SemanticsKind::AnswerSet);
    const auto r = member(p, classes::kNormal) ? solve_np(p, SemanticsKind::AnswerSet) : solve_sigma2(p);
    REQUIRE(r.answer == !all.empty());
    if (r.answer) CHECK(*r.witness == all.front());
    const auto sup = enumerate(p, SemanticsKind::Supported);
    const auto rs = solve_np(p, SemanticsKind::Supported);
    REQUIRE(rs.answer == !sup.empty());
    if (rs.answer) CHECK(*rs.witness == sup.front());
  }
}

TEST_CASE("decide examples") {
  const auto cred = run(TaskKind::CredNeg, "a | b.", "a");
  CHECK(cred.answer);
  CHECK(cred.engine_used == Engine::EasDualHorn);
  CHECK(cred.verdict.condition == "cr.A2");

  const auto skep = run(TaskKind::SkepNeg, "a | b.", "a");
  CHECK_FALSE(skep.answer);
  CHECK(witness_names(parse_program("a | b."), skep.witness) == Names{"a"});

  const auto espm = run(TaskKind::Espm, "a :- not a.");
  CHECK_FALSE(espm.answer);
  CHECK(espm.engine_used == Engine::SearchNp);

  const auto gfp = run(TaskKind::SuppSkepNeg, "a :- b. b :- a.", "a");
  CHECK_FALSE(gfp.answer);
  CHECK(gfp.engine_used == Engine::SuppHornGfp);

  const auto sskep = run(TaskKind::SuppSkepNeg, "a :- b. b :- a. :- a, c.", "a");
  CHECK_FALSE(sskep.answer);
  CHECK(sskep.verdict.condition == "ssk.4");
  CHECK(sskep.engine_used == Engine::SuppSkepCycle);

  const auto horn = run(TaskKind::Eas, "a. b :- a. :- c.");
  CHECK(horn.answer);
  CHECK(horn.engine_used == Engine::EasHorn);
}

TEST_CASE("tasks validate their query atom") {
  CHECK_THROWS_AS(Task::make(TaskKind::CredNeg), PreconditionError);
  CHECK_THROWS_AS(Task::make(TaskKind::Eas, "a"), PreconditionError);
  CHECK_THROWS_AS(decide(Task{TaskKind::SkepNeg, std::nullopt}, Program{}), PreconditionError);
}

TEST_CASE("query atoms absent from the program") {
  CHECK(run(TaskKind::CredNeg, "a.", "zz").answer);
  CHECK(run(TaskKind::SkepNeg, "a.", "zz").answer);
  CHECK(run(TaskKind::SuppSkepNeg, "a :- b.", "zz").answer);
  CHECK_FALSE(run(TaskKind::CredNeg, "a :- not a.", "zz").answer);
}

TEST_CASE("decide agrees with the reference semantics on every task") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 1200; ++i) {
    const auto& cls = profiles()[i % profiles().size()];
    const auto p = harness::random_program(cls, rng, 8);
    const auto kind = kAllTasks[rng() % 6];
    std::optional<std::string> atom;
    if (needs_query_atom(kind)) atom = rng() % 5 == 0 ? "zz" : p.name(Atom{static_cast<std::uint32_t>(rng() % p.table().size())});
    INFO(to_string(kind) << " " << atom.value_or("") << "\n" << serialize_program(p));
    const auto d = decide(Task::make(kind, atom), p);
    CHECK(d.answer == expected(kind, p, atom.value_or("")));
    CHECK(d.verdict == classify(kind, profile(p)));

    // The engine actually run must accept the program it was given.
    Program q = p;
    if (atom) {
      const Atom a = q.intern(*atom);
      if (kind == TaskKind::CredNeg || kind == TaskKind::SuppCredNeg) q.add(Rule{{}, {a}, {}});
      if ((kind == TaskKind::SkepNeg || kind == TaskKind::SuppSkepNeg) && d.engine_used != Engine::SuppSkepCycle)
        q.add(Rule{{}, {}, {a}});
    }
    if (is_poly_engine(d.engine_used)) CHECK(engine_accepts(d.engine_used, q));

    if (d.witness) {
      const bool supported = kind == TaskKind::Espm || kind == TaskKind::SuppCredNeg || kind == TaskKind::SuppSkepNeg;
      const auto& m = *d.witness;
      Program named = p;
      if (atom) named.intern(*atom);
      CHECK((supported ? is_supported_model(named, m) : is_answer_set(named, m)));
      if (atom) {
        const bool has = m.contains(*named.table().find(*atom));
        // Credulous witnesses omit the atom; skeptical counterexamples contain it.
        CHECK(has == (kind == TaskKind::SkepNeg || kind == TaskKind::SuppSkepNeg));
      }
    }
  }
}

TEST_CASE("entailment reduces to existence on the augmented program") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const auto p = harness::random_program(AritySet{{2, 2, 2}, {0, 2, 2}}, rng, 7);
    const std::string a = p.name(Atom{static_cast<std::uint32_t>(rng() % p.table().size())});
    Program with_neg = p, with_pos = p;
    with_neg.add(Rule{{}, {}, {with_neg.intern(a)}});
    with_pos.add(Rule{{}, {with_pos.intern(a)}, {}});
    CHECK(decide(Task::make(TaskKind::SkepNeg, a), p).answer == !oracle::eas(with_neg));
    CHECK(decide(Task::make(TaskKind::CredNeg, a), p).answer == oracle::eas(with_pos));
  }
}
