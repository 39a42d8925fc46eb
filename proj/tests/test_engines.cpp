#include <catch_amalgamated.hpp>

#include "harness.hpp"

using namespace arity_asp;

namespace {

using Names = std::set<std::string>;

Names names_of(const Program& p, const std::optional<Interpretation>& m) {
  REQUIRE(m.has_value());
  return oracle::names(p, *m);
}

// The same program with atom ids assigned in reverse order of first occurrence.
Program reversed_ids(const Program& p) {
  AtomTable t;
  const auto atoms = atoms_of(p).atoms();
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) t.intern(p.name(*it));
  Program q(t);
  for (const auto& r : p.rules()) {
    Rule s;
    for (auto a : r.head) s.head.push_back(*q.table().find(p.name(a)));
    for (auto a : r.pos) s.pos.push_back(*q.table().find(p.name(a)));
    for (auto a : r.neg) s.neg.push_back(*q.table().find(p.name(a)));
    q.add(std::move(s));
  }
  return q;
}

}  // namespace

TEST_CASE("horn_least_model") {
  const auto p = parse_program("a. b :- a. c :- d.");
  CHECK(oracle::names(p, horn_least_model(p)) == Names{"a", "b"});
  CHECK(horn_least_model(Program{}).empty());
  CHECK(horn_least_model(parse_program("a :- a.")).empty());
  CHECK_THROWS_AS(horn_least_model(parse_program("a | b.")), EngineMismatch);
}

TEST_CASE("dual_horn_has_model") {
  const auto p = parse_program("a | b. :- a.");
  const auto r = dual_horn_has_model(p);
  CHECK(r.answer);
  CHECK(names_of(p, r.witness) == Names{"b"});
  CHECK_FALSE(dual_horn_has_model(parse_program("a. :- a.")).answer);
  const auto e = dual_horn_has_model(Program{});
  CHECK(e.answer);
  CHECK(e.witness->empty());
  CHECK_THROWS_AS(dual_horn_has_model(parse_program("a :- b, c.")), EngineMismatch);
}

TEST_CASE("two_sat_has_model") {
  const auto x = parse_program("a | b. :- a, b.");
  const auto r = two_sat_has_model(x);
  CHECK(r.answer);
  CHECK(names_of(x, r.witness).size() == 1);
  CHECK_FALSE(two_sat_has_model(parse_program("a. b. :- a, b.")).answer);
  const auto e = two_sat_has_model(parse_program("a :- b."));
  CHECK(e.answer);
  CHECK(is_model(parse_program("a :- b."), *e.witness));
  CHECK_THROWS_AS(two_sat_has_model(parse_program("a | b | c.")), EngineMismatch);
}

TEST_CASE("eas_poly examples") {
  CHECK(eas_poly(parse_program("a | b :- c."), Engine::EasPositiveProper).answer);
  CHECK_FALSE(eas_poly(parse_program("a. :- a."), Engine::EasHorn).answer);
  CHECK(eas_poly(parse_program("a | b. :- a, b."), Engine::EasTwoLiteral).answer);
  CHECK_FALSE(eas_poly(parse_program("a | b. :- ."), Engine::EasPositiveProper).answer);
  CHECK_THROWS_AS(eas_poly(parse_program("a :- not b."), Engine::EasHorn), EngineMismatch);
  CHECK_THROWS_AS(eas_poly(parse_program("a."), Engine::SuppFacts), EngineMismatch);
}

TEST_CASE("eas_poly witness modes") {
  const auto p = parse_program("a | b | c. d | a.");
  CHECK_FALSE(eas_poly(p, Engine::EasPositiveProper, {}, WitnessMode::Skip).witness);
  const auto r = eas_poly(p, Engine::EasPositiveProper);
  CHECK(names_of(p, r.witness) == Names{"a"});
  Caps tiny;
  tiny.minimality = 2;
  CHECK_FALSE(eas_poly(p, Engine::EasPositiveProper, tiny).witness);
  CHECK_THROWS_AS(eas_poly(p, Engine::EasPositiveProper, tiny, WitnessMode::Required), OracleLimitExceeded);
}

TEST_CASE("supported_rewrite") {
  const auto p = parse_program("a :- b. b :- a. :- a, not c.");
  const auto residue = supported_rewrite(p);
  CHECK(split(residue).first.empty());
  const auto r = espm_poly(p, Engine::SuppRewrite);
  CHECK(r.answer);
  CHECK(r.witness->empty());
  CHECK(oracle::espm(p));

  const auto bad = parse_program("a :- b. :- .");
  CHECK(has_contradictory_rule(supported_rewrite(bad)));
  CHECK_FALSE(espm_poly(bad, Engine::SuppRewrite).answer);

  CHECK(supported_rewrite(parse_program("a.")).empty());
  CHECK(espm_poly(parse_program("a."), Engine::SuppRewrite).answer);
}

TEST_CASE("horn_greatest_supported") {
  const auto p = parse_program("a :- b. b :- a. c.");
  CHECK(oracle::names(p, horn_greatest_supported(p)) == Names{"a", "b", "c"});
  const auto f = parse_program("a.");
  CHECK(oracle::names(f, horn_greatest_supported(f)) == Names{"a"});
  CHECK(horn_greatest_supported(parse_program("a :- b.")).empty());
}

TEST_CASE("espm_poly examples") {
  CHECK_FALSE(espm_poly(parse_program("a. :- a."), Engine::SuppFacts).answer);
  const auto g = parse_program("a :- b. b :- a. :- not a.");
  const auto r = espm_poly(g, Engine::SuppHornGfp);
  CHECK(r.answer);
  CHECK(names_of(g, r.witness) == Names{"a", "b"});
  CHECK(espm_poly(parse_program("a | b. :- a, b."), Engine::SuppModelExists).answer);
}

TEST_CASE("supp_skeptical_poly") {
  auto query = [](const char* text, const char* atom) {
    Program p = parse_program(text);
    const Atom a = p.intern(atom);
    return supp_skeptical_poly(p, a);
  };
  CHECK_FALSE(query("a :- b. b :- a.", "a"));
  CHECK(query("a :- b.", "a"));
  CHECK(query("c.", "a"));
}

TEST_CASE("every polynomial engine agrees with the reference semantics") {
  for (const auto& c : harness::engine_cases()) {
    const auto t = harness::engine_vs_oracle(c, 150, 0xE1 + static_cast<unsigned>(c.engine));
    INFO(t.first_failure);
    CHECK(t.ok());
  }
}

TEST_CASE("least model is below every model and is the unique answer set") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto p = harness::random_program(classes::kProperHorn, rng, 10);
    const auto lm = horn_least_model(p);
    CHECK(is_model(p, lm));
    const auto o = oracle::from_program(p);
    const auto lm_names = oracle::names(p, lm);
    for (oracle::Mask m = 0; m <= oracle::full(o); ++m) {
      if (oracle::model(o.rules, m)) {
        const auto s = oracle::names(o, m);
        CHECK(std::includes(s.begin(), s.end(), lm_names.begin(), lm_names.end()));
      }
      if (m == oracle::full(o)) break;
    }
    CHECK(oracle::answer_set_names(p) == std::set<Names>{lm_names});
  }
}

TEST_CASE("dual Horn witness of model existence is the greatest model") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const auto p = harness::random_program(classes::kDualHorn, rng, 10);
    const auto r = dual_horn_has_model(p);
    const auto o = oracle::from_program(p);
    CHECK(r.answer == oracle::has_model(o));
    if (!r.answer) continue;
    const auto top = oracle::names(p, *r.witness);
    for (oracle::Mask m = 0; m <= oracle::full(o); ++m) {
      if (oracle::model(o.rules, m)) {
        const auto s = oracle::names(o, m);
        CHECK(std::includes(top.begin(), top.end(), s.begin(), s.end()));
      }
      if (m == oracle::full(o)) break;
    }
  }
}

TEST_CASE("positive programs: a model exists iff a supported model does") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto p = harness::random_program(classes::kPositive, rng, 10);
    CHECK(oracle::has_model(oracle::from_program(p)) == oracle::espm(p));
  }
}

TEST_CASE("rewrite preserves supported-model existence regardless of atom order") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 300; ++i) {
    const auto p = harness::random_program(classes::kSuppRewrite, rng, 8);
    INFO(serialize_program(p));
    const bool before = oracle::espm(p);
    CHECK(oracle::espm(supported_rewrite(p)) == before);
    const auto q = reversed_ids(p);
    CHECK(espm_poly(q, Engine::SuppRewrite).answer == before);
    CHECK(oracle::espm(supported_rewrite(q)) == before);
  }
}
