#pragma once

// Atoms, rules, programs and interpretations, plus the text format:
//
//   program   := statement*
//   statement := rule "."
//   rule      := head? (":-" body?)?
//   head      := atom ("|" atom)*
//   body      := literal ("," literal)*
//   literal   := atom | "not" atom
//   atom      := [a-z][A-Za-z0-9_]*
//
// "%" starts a comment running to end of line. Names beginning with "_g" are
// reserved for atoms introduced by program transformations and are accepted
// by the parser so that transformed programs can be read back.

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arity.hpp"
#include "errors.hpp"

namespace arity_asp {

struct Atom {
  std::uint32_t id = 0;
  constexpr auto operator<=>(const Atom&) const = default;
};

inline bool is_user_atom_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline bool is_reserved_atom_name(std::string_view s) {
  if (s.size() < 2 || s.substr(0, 2) != "_g") return false;
  return std::all_of(s.begin() + 2, s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

/// Bijective name <-> id map; ids follow first interning order.
class AtomTable {
 public:
  Atom intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return Atom{it->second};
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return Atom{id};
  }

  std::optional<Atom> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return Atom{it->second};
  }

  const std::string& name(Atom a) const { return names_.at(a.id); }
  std::size_t size() const { return names_.size(); }

  /// A new atom named "_g<counter>_<hint>", skipping names already taken.
  Atom fresh(std::string_view hint = {}) {
    for (;;) {
      std::string candidate = "_g" + std::to_string(fresh_counter_++);
      if (!hint.empty()) {
        candidate += "_";
        candidate += hint;
      }
      if (!index_.contains(candidate)) return intern(candidate);
    }
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint32_t fresh_counter_ = 0;
};

/// A finite set of atoms stored as a dense bitset over atom ids.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(std::initializer_list<Atom> atoms) {
    for (auto a : atoms) insert(a);
  }
  explicit Interpretation(const std::vector<Atom>& atoms) {
    for (auto a : atoms) insert(a);
  }

  bool contains(Atom a) const {
    const auto w = a.id / 64;
    return w < words_.size() && ((words_[w] >> (a.id % 64)) & 1u);
  }

  void insert(Atom a) {
    const auto w = a.id / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (a.id % 64);
  }

  void erase(Atom a) {
    const auto w = a.id / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (a.id % 64));
    trim();
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const { return words_.empty(); }

  bool subset_of(const Interpretation& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

  Interpretation& operator|=(const Interpretation& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Interpretation& operator-=(const Interpretation& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
    trim();
    return *this;
  }

  friend Interpretation operator|(Interpretation a, const Interpretation& b) { return a |= b; }
  friend Interpretation operator-(Interpretation a, const Interpretation& b) { return a -= b; }

  /// Members in ascending id order.
  std::vector<Atom> atoms() const {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        out.push_back(Atom{static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(b))});
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending atom-id sequences; the empty set is least.
inline bool lex_less(const Interpretation& a, const Interpretation& b) {
  const auto xs = a.atoms();
  const auto ys = b.atoms();
  return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
}

struct Rule {
  std::vector<Atom> head;
  std::vector<Atom> pos;
  std::vector<Atom> neg;

  bool is_constraint() const { return head.empty(); }
  bool is_contradictory() const { return head.empty() && pos.empty() && neg.empty(); }
  bool is_positive() const { return neg.empty(); }

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Arity counts occurrences, so "a | a :- not b." has arity [2,0,1].
inline ArityTriple arity_of_rule(const Rule& r) {
  return {ExtNat(static_cast<std::uint32_t>(r.head.size())), ExtNat(static_cast<std::uint32_t>(r.pos.size())),
          ExtNat(static_cast<std::uint32_t>(r.neg.size()))};
}

class Program {
 public:
  Program() = default;
  explicit Program(AtomTable table) : table_(std::move(table)) {}

  const std::vector<Rule>& rules() const { return rules_; }
  const AtomTable& table() const { return table_; }
  AtomTable& table() { return table_; }

  Atom intern(std::string_view name) { return table_.intern(name); }
  Atom fresh(std::string_view hint = {}) { return table_.fresh(hint); }
  const std::string& name(Atom a) const { return table_.name(a); }

  void add(Rule r) { rules_.push_back(std::move(r)); }

  /// Builder shorthand over names.
  void add(std::initializer_list<std::string_view> head, std::initializer_list<std::string_view> pos = {},
           std::initializer_list<std::string_view> neg = {}) {
    Rule r;
    for (auto n : head) r.head.push_back(intern(n));
    for (auto n : pos) r.pos.push_back(intern(n));
    for (auto n : neg) r.neg.push_back(intern(n));
    rules_.push_back(std::move(r));
  }

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// Same program with a different rule list, sharing the atom table.
  Program with_rules(std::vector<Rule> rules) const {
    Program p(table_);
    p.rules_ = std::move(rules);
    return p;
  }

 private:
  AtomTable table_;
  std::vector<Rule> rules_;
};

/// At(P): the atoms occurring in some rule.
inline Interpretation atoms_of(const Program& p) {
  Interpretation s;
  for (const auto& r : p.rules()) {
    for (auto a : r.head) s.insert(a);
    for (auto a : r.pos) s.insert(a);
    for (auto a : r.neg) s.insert(a);
  }
  return s;
}

inline bool has_contradictory_rule(const Program& p) {
  return std::any_of(p.rules().begin(), p.rules().end(), [](const Rule& r) { return r.is_contradictory(); });
}

inline bool is_positive(const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(), [](const Rule& r) { return r.is_positive(); });
}

/// Proper rules and constraints, each in input order.
inline std::pair<Program, Program> split(const Program& p) {
  std::vector<Rule> proper, constraints;
  for (const auto& r : p.rules()) (r.is_constraint() ? constraints : proper).push_back(r);
  return {p.with_rules(std::move(proper)), p.with_rules(std::move(constraints))};
}

inline Program proper_part(const Program& p) { return split(p).first; }
inline Program constraint_part(const Program& p) { return split(p).second; }

/// Distinct rule arities, in first-occurrence order.
inline AritySet profile(const Program& p) {
  AritySet d;
  for (const auto& r : p.rules()) d.insert(arity_of_rule(r));
  return d;
}

/// Rule arities with multiplicities.
inline std::map<ArityTriple, std::size_t> arity_multiset(const Program& p) {
  std::map<ArityTriple, std::size_t> out;
  for (const auto& r : p.rules()) ++out[arity_of_rule(r)];
  return out;
}

/// P in F(d) (implicit: dominated by some element) or P in G(d) (explicit: exact element).
inline bool member(const Program& p, const AritySet& d) {
  return std::all_of(p.rules().begin(), p.rules().end(), [&](const Rule& r) {
    const auto a = arity_of_rule(r);
    return d.schema() == Schema::Explicit ? d.contains(a) : preceq(a, d);
  });
}

/// Rules compared by atom names, ignoring table layout.
inline bool structurally_equal(const Program& a, const Program& b) {
  if (a.size() != b.size()) return false;
  auto same = [&](const std::vector<Atom>& xs, const std::vector<Atom>& ys) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (a.name(xs[i]) != b.name(ys[i])) return false;
    return true;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& r = a.rules()[i];
    const auto& s = b.rules()[i];
    if (!same(r.head, s.head) || !same(r.pos, s.pos) || !same(r.neg, s.neg)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format

namespace detail {

class Lexer {
 public:
  enum class Kind { Ident, Bar, If, Comma, Dot, End };
  struct Token {
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
  };

  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    Token t{Kind::End, {}, line_, col_};
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (c == '|') return advance(t, Kind::Bar, 1);
    if (c == ',') return advance(t, Kind::Comma, 1);
    if (c == '.') return advance(t, Kind::Dot, 1);
    if (c == ':') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') return advance(t, Kind::If, 2);
      throw ParseError("expected \":-\"", line_, col_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
      t.text = std::string(src_.substr(pos_, end - pos_));
      if (!is_user_atom_name(t.text) && !is_reserved_atom_name(t.text))
        throw ParseError("invalid atom name \"" + t.text + "\" (atoms start with a lowercase letter)", line_, col_);
      t.kind = Kind::Ident;
      col_ += end - pos_;
      pos_ = end;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

 private:
  Token advance(Token t, Kind k, std::size_t n) {
    t.kind = k;
    t.text = std::string(src_.substr(pos_, n));
    pos_ += n;
    col_ += n;
    return t;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  Program parse() {
    Program p;
    while (tok_.kind != Lexer::Kind::End) p.add(rule(p));
    return p;
  }

 private:
  using Kind = Lexer::Kind;

  Rule rule(Program& p) {
    Rule r;
    if (tok_.kind == Kind::Ident) {
      r.head.push_back(atom(p));
      while (tok_.kind == Kind::Bar) {
        shift();
        r.head.push_back(atom(p));
      }
    }
    if (tok_.kind == Kind::If) {
      shift();
      if (tok_.kind != Kind::Dot) {
        literal(p, r);
        while (tok_.kind == Kind::Comma) {
          shift();
          literal(p, r);
        }
      }
    }
    expect(Kind::Dot, "\".\"");
    return r;
  }

  void literal(Program& p, Rule& r) {
    if (tok_.kind == Kind::Ident && tok_.text == "not") {
      shift();
      r.neg.push_back(atom(p));
    } else {
      r.pos.push_back(atom(p));
    }
  }

  Atom atom(Program& p) {
    if (tok_.kind != Kind::Ident) fail("expected an atom");
    if (tok_.text == "not") fail("\"not\" is reserved");
    Atom a = p.intern(tok_.text);
    shift();
    return a;
  }

  void expect(Kind k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what);
    shift();
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok_.line, tok_.column); }

  void shift() { tok_ = lex_.next(); }

  Lexer lex_;
  Lexer::Token tok_;
};

}  // namespace detail

inline Program parse_program(std::string_view text) { return detail::Parser(text).parse(); }

inline Program load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

inline std::string rule_to_string(const Program& p, const Rule& r) {
  std::string s;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i) s += " | ";
    s += p.name(r.head[i]);
  }
  const bool has_body = !r.pos.empty() || !r.neg.empty();
  if (has_body || r.head.empty()) {
    s += r.head.empty() ? ":-" : " :-";
    bool first = true;
    for (auto a : r.pos) {
      s += first ? " " : ", ";
      s += p.name(a);
      first = false;
    }
    for (auto a : r.neg) {
      s += first ? " not " : ", not ";
      s += p.name(a);
      first = false;
    }
    if (!has_body) s += " ";
  }
  return s + ".";
}

/// One rule per line; parse_program(serialize_program(p)) reproduces p's rules.
inline std::string serialize_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) {
    out += rule_to_string(p, r);
    out += '\n';
  }
  return out;
}

inline std::string interpretation_to_string(const Program& p, const Interpretation& m) {
  std::string s = "{";
  bool first = true;
  for (auto a : m.atoms()) {
    if (!first) s += ",";
    s += a.id < p.table().size() ? p.name(a) : "#" + std::to_string(a.id);
    first = false;
  }
  return s + "}";
}

}  // namespace arity_asp
