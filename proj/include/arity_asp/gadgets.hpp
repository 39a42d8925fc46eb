#pragma once

// Reduction constructions between CNF satisfiability and the program classes,
// plus the program-to-program transformations used to move between tasks and
// schemas. Each comes with a decision-equivalence contract checked by the
// test suite against the exhaustive oracles.
//
// CNF text format: one clause per line, literals separated by whitespace,
// "-" marks negation, "%" starts a comment. A trailing "0" token is ignored;
// a line holding only "0" is the empty clause.

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arity.hpp"
#include "errors.hpp"
#include "program.hpp"

namespace arity_asp {

struct Literal {
  std::string atom;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct CnfFormula {
  std::vector<Clause> clauses;

  /// Atoms in order of first occurrence.
  std::vector<std::string> atoms() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& c : clauses)
      for (const auto& l : c)
        if (seen.insert(l.atom).second) out.push_back(l.atom);
    return out;
  }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Whether the atoms in `truth` (all others false) satisfy every clause.
inline bool cnf_holds(const CnfFormula& phi, const std::set<std::string>& truth) {
  return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return truth.contains(l.atom) == l.positive; });
  });
}

inline CnfFormula parse_cnf(std::string_view text) {
  CnfFormula phi;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string::npos) line.erase(pct);
    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    const bool only_zero = tokens.size() == 1 && tokens[0].first == "0";
    if (!only_zero && tokens.back().first == "0") tokens.pop_back();
    Clause c;
    if (!only_zero) {
      for (const auto& [tok, col] : tokens) {
        Literal l;
        std::string_view name = tok;
        if (name.starts_with('-')) {
          l.positive = false;
          name.remove_prefix(1);
        }
        if (!is_user_atom_name(name) && !is_reserved_atom_name(name))
          throw ParseError("invalid literal '" + tok + "'", line_no, col);
        l.atom = std::string(name);
        c.push_back(std::move(l));
      }
    }
    phi.clauses.push_back(std::move(c));
  }
  return phi;
}

inline CnfFormula load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cnf(buf.str());
}

inline std::string serialize_cnf(const CnfFormula& phi) {
  std::string out;
  for (const auto& c : phi.clauses) {
    if (c.empty()) out += "0";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      if (!c[i].positive) out += '-';
      out += c[i].atom;
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline void require_three_literals(const CnfFormula& phi) {
  for (const auto& c : phi.clauses)
    if (c.size() != 3) throw ShapeError("every clause must have exactly three literals");
}

// A name table seeded with the formula's atoms, so fresh names never clash.
inline AtomTable table_for(const CnfFormula& phi) {
  AtomTable t;
  for (const auto& a : phi.atoms()) t.intern(a);
  return t;
}

}  // namespace detail

/// Rewrite a 3-CNF into one of four restricted clause shapes, preserving
/// satisfiability. Every atom z gets a fresh complement z' with z | z' and
/// "not both" clauses; each original clause is then re-signed by priming its
/// rightmost literals until it has the target number of positive literals:
/// case 1: three positive; case 2: two positive, one negative;
/// case 3: one positive, two negative; case 4: three negative.
/// Case 3 expresses "not both" as f | -z | -z' together with -f.
/// `primes`, when given, receives the z -> z' name map.
inline CnfFormula gadget_sat_shape(const CnfFormula& phi, int case_id,
                                   std::map<std::string, std::string>* primes = nullptr) {
  if (case_id < 1 || case_id > 4) throw PreconditionError("sat-shape case must be 1..4");
  detail::require_three_literals(phi);
  const std::size_t target_positive = 4 - static_cast<std::size_t>(case_id);

  AtomTable names = detail::table_for(phi);
  std::map<std::string, std::string> prime;
  for (const auto& z : phi.atoms()) prime[z] = names.name(names.fresh(z + "_p"));
  const std::string f = case_id == 3 ? names.name(names.fresh("f")) : std::string();

  CnfFormula out;
  for (const auto& z : phi.atoms()) out.clauses.push_back({{z, true}, {prime[z], true}});
  for (const auto& z : phi.atoms()) {
    if (case_id == 3) out.clauses.push_back({{f, true}, {z, false}, {prime[z], false}});
    else out.clauses.push_back({{z, false}, {prime[z], false}});
  }
  if (case_id == 3) out.clauses.push_back({{f, false}});

  for (const auto& c : phi.clauses) {
    Clause hat = c;
    auto positives = static_cast<std::size_t>(
        std::count_if(hat.begin(), hat.end(), [](const Literal& l) { return l.positive; }));
    for (std::size_t i = hat.size(); i-- > 0 && positives != target_positive;) {
      auto& l = hat[i];
      if (positives > target_positive && l.positive) {
        l = {prime[l.atom], false};
        --positives;
      } else if (positives < target_positive && !l.positive) {
        l = {prime[l.atom], true};
        ++positives;
      }
    }
    if (positives != target_positive) throw ShapeError("clause cannot be re-signed to the target shape");
    out.clauses.push_back(std::move(hat));
  }
  if (primes) *primes = std::move(prime);
  return out;
}

/// From a CNF whose clauses are two-atom disjunctions or disjunctions of at
/// most three negated atoms: a|b <- for each positive clause; for each
/// negative clause c = -y1 | ... | -yk a fresh x_c with x_c | yi <- and
/// <- not x_c. The formula is satisfiable iff the program has an answer set.
inline Program gadget_eas_R(const CnfFormula& phi) {
  Program p(detail::table_for(phi));
  std::vector<Rule> guards;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const auto& c = phi.clauses[i];
    const bool all_positive = std::all_of(c.begin(), c.end(), [](const Literal& l) { return l.positive; });
    const bool all_negative = std::none_of(c.begin(), c.end(), [](const Literal& l) { return l.positive; });
    if (c.size() == 2 && all_positive) {
      p.add(Rule{{p.intern(c[0].atom), p.intern(c[1].atom)}, {}, {}});
    } else if (all_negative && c.size() <= 3) {
      const Atom x = p.fresh("x" + std::to_string(i));
      for (const auto& l : c) p.add(Rule{{x, p.intern(l.atom)}, {}, {}});
      guards.push_back(Rule{{}, {}, {x}});
    } else {
      throw ShapeError("clause " + std::to_string(i + 1) +
                       " is neither a two-atom disjunction nor at most three negated atoms");
    }
  }
  for (auto& r : guards) p.add(std::move(r));
  return p;
}

/// Supported-model encoding of a 3-CNF. Variant 7 uses x <- x, x' <- x',
/// <- x, x' per atom and c^ <- x (positive x in c), c^ <- y' (negated y in c),
/// <- not c^ per clause. Variant 8 derives f <- x, x' instead and adds <- f.
inline Program gadget_supported(const CnfFormula& phi, int variant) {
  if (variant != 7 && variant != 8) throw PreconditionError("supported gadget variant must be 7 or 8");
  detail::require_three_literals(phi);
  Program p(detail::table_for(phi));
  std::map<std::string, Atom> prime;
  for (const auto& z : phi.atoms()) prime[z] = p.fresh(z + "_p");
  const std::optional<Atom> f = variant == 8 ? std::optional<Atom>(p.fresh("f")) : std::nullopt;

  for (const auto& z : phi.atoms()) {
    const Atom x = p.intern(z);
    const Atom xp = prime[z];
    p.add(Rule{{x}, {x}, {}});
    p.add(Rule{{xp}, {xp}, {}});
    if (f) p.add(Rule{{*f}, {x, xp}, {}});
    else p.add(Rule{{}, {x, xp}, {}});
  }
  std::vector<Atom> hats;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const Atom hat = p.fresh("c" + std::to_string(i));
    hats.push_back(hat);
    for (const auto& l : phi.clauses[i]) p.add(Rule{{hat}, {l.positive ? p.intern(l.atom) : prime[l.atom]}, {}});
  }
  for (auto hat : hats) p.add(Rule{{}, {}, {hat}});
  if (f) p.add(Rule{{}, {*f}, {}});
  return p;
}

/// Rewrite p (in the implicit class of d) into the explicit class G(d)
/// without changing answer-set existence. A rule whose arity is not in d is
/// padded to the element of d needing the fewest extra literals (first in
/// d's order on ties): its first head atom is repeated, a fresh atom a is
/// added to the positive body and "not b" (b fresh, never derivable) to the
/// negative body. The rule a|...|a <- not a', ..., not a' built from the
/// first [k,0,m] in d with k >= 1 forces a into every answer set.
inline Program pad_to_explicit(const Program& p, const AritySet& d) {
  if (d.schema() != Schema::Explicit) throw PreconditionError("pad_to_explicit needs an explicit arity set");
  const ArityTriple* aux = nullptr;
  for (const auto& t : d.elements())
    if (t.k >= ExtNat(1) && t.m == ExtNat(0)) {
      aux = &t;
      break;
    }
  if (!aux) throw PreconditionError("no arity [k,0,m] with k >= 1 in " + d.str());
  const AritySet implicit(d.elements(), Schema::Implicit);
  if (!member(p, implicit)) throw PreconditionError("program is not in the implicit class of " + d.str());

  Program out(p.table());
  const Atom a = out.fresh("a");
  const Atom a_neg = out.fresh("a_p");
  const Atom b = out.fresh("b");
  for (const auto& r : p.rules()) {
    const auto have = arity_of_rule(r);
    if (d.contains(have)) {
      out.add(r);
      continue;
    }
    const ArityTriple* best = nullptr;
    std::uint64_t best_cost = 0;
    for (const auto& t : d.elements()) {
      if (!preceq(have, t)) continue;
      const std::uint64_t cost = (t.k.value() - have.k.value()) + (t.m.value() - have.m.value()) +
                                 (t.n.value() - have.n.value());
      if (!best || cost < best_cost) {
        best = &t;
        best_cost = cost;
      }
    }
    Rule padded = r;
    while (padded.head.size() < best->k.value()) padded.head.push_back(r.head.front());
    while (padded.pos.size() < best->m.value()) padded.pos.push_back(a);
    while (padded.neg.size() < best->n.value()) padded.neg.push_back(b);
    out.add(std::move(padded));
  }
  out.add(Rule{std::vector<Atom>(aux->k.value(), a), {}, std::vector<Atom>(aux->n.value(), a_neg)});
  return out;
}

/// The proper rules of p plus a <- body(r) for every constraint r; p has an
/// answer set iff some answer set of the result omits a.
inline Program fold_constraints(const Program& p, const std::string& atom) {
  if (auto existing = p.table().find(atom); existing && atoms_of(p).contains(*existing))
    throw AtomNotFresh("atom '" + atom + "' occurs in the program");
  Program out(p.table());
  const Atom a = out.intern(atom);
  std::vector<Rule> folded;
  for (const auto& r : p.rules()) {
    if (r.is_constraint()) folded.push_back(Rule{{a}, r.pos, r.neg});
    else out.add(r);
  }
  for (auto& r : folded) out.add(std::move(r));
  return out;
}

/// Replace the constraints <- not a1, ..., <- not ak by the chain
/// b1 <- a1, bi <- b(i-1), ai. p has a supported model iff the result has a
/// supported model containing bk, which is returned alongside.
inline std::pair<Program, std::string> chain_replace(const Program& p, const std::vector<std::string>& a_list) {
  if (a_list.empty()) throw PreconditionError("chain_replace needs at least one atom");
  static const AritySet kSource{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}};
  if (!member(p, kSource)) throw PreconditionError("program is not in the class " + kSource.str());
  std::set<std::string> listed(a_list.begin(), a_list.end());
  if (listed.size() != a_list.size()) throw PreconditionError("atom list has duplicates");
  std::set<std::string> denied;
  for (const auto& r : p.rules())
    if (r.is_constraint() && r.pos.empty() && r.neg.size() == 1) denied.insert(p.name(r.neg.front()));
  if (denied != listed) throw PreconditionError("atom list must name exactly the atoms a with a constraint <- not a");

  Program out(p.table());
  for (const auto& r : p.rules())
    if (!(r.is_constraint() && r.pos.empty() && r.neg.size() == 1)) out.add(r);
  Atom prev{};
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    const Atom ai = out.intern(a_list[i]);
    const Atom bi = out.fresh("b" + std::to_string(i + 1));
    if (i == 0) out.add(Rule{{bi}, {ai}, {}});
    else out.add(Rule{{bi}, {prev, ai}, {}});
    prev = bi;
  }
  return {out, out.name(prev)};
}

}  // namespace arity_asp
