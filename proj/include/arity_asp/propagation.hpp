#pragma once

// Linear-time propagation kernels shared by the semantic checkers and the
// decision engines: Horn forward chaining, the dual (greatest-model) variant
// for dual Horn programs, and 2-SAT via strongly connected components.
// Callers are responsible for class preconditions; these kernels assert only
// what they need to stay well defined.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "program.hpp"

namespace arity_asp::detail {

inline std::vector<Atom> distinct(std::vector<Atom> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline std::size_t atom_bound(const Program& p) {
  std::size_t n = p.table().size();
  for (const auto& r : p.rules())
    for (const auto* part : {&r.head, &r.pos, &r.neg})
      for (auto a : *part) n = std::max<std::size_t>(n, a.id + 1);
  return n;
}

/// Least model of the proper rules of p read as definite clauses. Every
/// proper rule must have at most one distinct head atom; negative literals
/// and constraints are ignored.
inline Interpretation least_model(const Program& p) {
  const std::size_t n = atom_bound(p);
  std::vector<std::vector<std::size_t>> watch(n);
  std::vector<std::size_t> missing(p.size(), 0);
  std::vector<char> value(n, 0);
  std::vector<Atom> queue;

  auto fire = [&](const Rule& r) {
    const Atom h = r.head.front();
    if (!value[h.id]) {
      value[h.id] = 1;
      queue.push_back(h);
    }
  };

  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& r = p.rules()[i];
    if (r.is_constraint()) continue;
    if (distinct(r.head).size() != 1) throw EngineMismatch("least model needs single-headed rules");
    const auto body = distinct(r.pos);
    missing[i] = body.size();
    for (auto b : body) watch[b.id].push_back(i);
    if (body.empty()) fire(r);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto i : watch[queue[q].id])
      if (--missing[i] == 0) fire(p.rules()[i]);
  }
  Interpretation m;
  for (auto a : queue) m.insert(a);
  return m;
}

/// Greatest model of a positive dual Horn program (at most one distinct body
/// atom per rule) inside `universe`, with the atoms of `forced_false` fixed to
/// false; nullopt when no model exists. Atoms of p outside `universe` are
/// treated as false as well.
inline std::optional<Interpretation> dual_horn_greatest_model(const Program& p, const Interpretation& universe,
                                                              const Interpretation& forced_false = {}) {
  const std::size_t n = atom_bound(p);
  std::vector<std::vector<std::size_t>> head_of(n);
  std::vector<std::size_t> alive(p.size(), 0);
  std::vector<std::optional<Atom>> body(p.size());
  std::vector<char> is_false(n, 0);
  std::vector<Atom> queue;
  bool conflict = false;

  auto make_false = [&](Atom a) {
    if (a.id < n && !is_false[a.id]) {
      is_false[a.id] = 1;
      queue.push_back(a);
    }
  };
  auto dead = [&](std::size_t i) {
    if (body[i]) make_false(*body[i]);
    else conflict = true;
  };

  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& r = p.rules()[i];
    if (!r.neg.empty()) throw EngineMismatch("dual Horn propagation needs a positive program");
    const auto b = distinct(r.pos);
    if (b.size() > 1) throw EngineMismatch("dual Horn propagation needs at most one body atom per rule");
    if (!b.empty()) body[i] = b.front();
    const auto h = distinct(r.head);
    alive[i] = h.size();
    for (auto a : h) head_of[a.id].push_back(i);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Atom at{static_cast<std::uint32_t>(a)};
    if (!universe.contains(at) || forced_false.contains(at)) make_false(at);
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (alive[i] == 0) dead(i);
  for (std::size_t q = 0; q < queue.size() && !conflict; ++q) {
    for (auto i : head_of[queue[q].id])
      if (--alive[i] == 0) dead(i);
  }
  if (conflict) return std::nullopt;
  Interpretation m;
  for (auto a : universe.atoms())
    if (a.id >= n ? !forced_false.contains(a) : !is_false[a.id]) m.insert(a);
  return m;
}

/// 2-SAT over the clause reading of a positive program (head atoms positive,
/// body atoms negated). Each rule must reduce to at most two distinct
/// literals. Returns a model restricted to the atoms of p, or nullopt.
inline std::optional<Interpretation> two_sat(const Program& p) {
  const std::size_t n = atom_bound(p);
  const std::size_t lits = 2 * n;
  auto lit = [](Atom a, bool positive) { return 2 * static_cast<std::size_t>(a.id) + (positive ? 0 : 1); };
  auto negate = [](std::size_t l) { return l ^ 1u; };
  std::vector<std::vector<std::size_t>> graph(lits);

  for (const auto& r : p.rules()) {
    if (!r.neg.empty()) throw EngineMismatch("2-SAT needs a positive program");
    std::vector<std::size_t> clause;
    for (auto a : r.head) clause.push_back(lit(a, true));
    for (auto a : r.pos) clause.push_back(lit(a, false));
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    bool tautology = false;
    for (std::size_t i = 0; i + 1 < clause.size(); ++i)
      if (clause[i] == negate(clause[i + 1])) tautology = true;
    if (tautology) continue;
    if (clause.empty()) return std::nullopt;
    if (clause.size() > 2) throw EngineMismatch("2-SAT needs rules with at most two literals");
    const auto x = clause.front();
    const auto y = clause.back();
    graph[negate(x)].push_back(y);
    if (x != y) graph[negate(y)].push_back(x);
  }

  // Iterative Tarjan; components are numbered in reverse topological order.
  std::vector<std::size_t> index(lits, SIZE_MAX), low(lits, 0), comp(lits, SIZE_MAX);
  std::vector<char> on_stack(lits, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, components = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t s = 0; s < lits; ++s) {
    if (index[s] != SIZE_MAX) continue;
    std::vector<Frame> call{{s, 0}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.edge < graph[f.v].size()) {
        const auto w = graph[f.v][f.edge++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const auto v = f.v;
      if (low[v] == index[v]) {
        for (;;) {
          const auto w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
          if (w == v) break;
        }
        ++components;
      }
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
    }
  }

  Interpretation m;
  for (auto a : atoms_of(p).atoms()) {
    const auto pos = comp[lit(a, true)];
    const auto neg = comp[lit(a, false)];
    if (pos == neg) return std::nullopt;
    if (pos < neg) m.insert(a);
  }
  return m;
}

}  // namespace arity_asp::detail
