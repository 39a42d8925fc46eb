#pragma once

// Seeded random programs whose rule arities are drawn from an arity set, for
// property tests and corpus generation. Output is a pure function of the
// arguments.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arity.hpp"
#include "errors.hpp"
#include "program.hpp"

namespace arity_asp {

/// Concrete arities available to a generator: the members of an explicit
/// set, or every arity dominated by an implicit one with each component
/// capped at `cap` (so superarities expand to finitely many triples).
inline std::vector<ArityTriple> arity_expansion(const AritySet& d, std::uint32_t cap = 3) {
  if (d.schema() == Schema::Explicit) return d.elements();
  std::vector<ArityTriple> out;
  for (std::uint32_t k = 0; k <= cap; ++k)
    for (std::uint32_t m = 0; m <= cap; ++m)
      for (std::uint32_t n = 0; n <= cap; ++n) {
        const ArityTriple t{ExtNat(k), ExtNat(m), ExtNat(n)};
        if (preceq(t, d)) out.push_back(t);
      }
  return out;
}

struct GenOptions {
  std::size_t atoms = 4;
  std::size_t rules = 6;
  std::uint64_t seed = 0;
  std::uint32_t cap = 3;
};

/// Atoms are named a0..a(N-1) and interned in that order; each rule takes an
/// arity uniformly from arity_expansion(d) and fills each position with a
/// uniformly drawn atom (repeats allowed).
inline Program generate_program(const AritySet& d, const GenOptions& opt) {
  const auto arities = arity_expansion(d, opt.cap);
  if (arities.empty()) throw PreconditionError("arity set " + d.str() + " admits no rule");
  std::vector<ArityTriple> usable;
  for (const auto& t : arities)
    if (opt.atoms > 0 || t.k.value() + t.m.value() + t.n.value() == 0) usable.push_back(t);
  if (usable.empty() && opt.rules > 0) throw PreconditionError("no atoms to build rules from");
  std::mt19937_64 rng(opt.seed);
  Program p;
  for (std::size_t i = 0; i < opt.atoms; ++i) p.intern("a" + std::to_string(i));
  auto atom = [&] { return Atom{static_cast<std::uint32_t>(rng() % opt.atoms)}; };
  for (std::size_t i = 0; i < opt.rules; ++i) {
    const auto& t = usable[rng() % usable.size()];
    Rule r;
    for (std::uint32_t j = 0; j < t.k.value(); ++j) r.head.push_back(atom());
    for (std::uint32_t j = 0; j < t.m.value(); ++j) r.pos.push_back(atom());
    for (std::uint32_t j = 0; j < t.n.value(); ++j) r.neg.push_back(atom());
    p.add(std::move(r));
  }
  return p;
}

}  // namespace arity_asp
