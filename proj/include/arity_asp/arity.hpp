#pragma once

// Extended naturals, arity triples and the domination order used to define
// program classes. Everything here is a pure function over small values.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace arity_asp {

/// A non-negative integer or infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint32_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtNat inf() { return ExtNat(kInf); }

  constexpr bool is_inf() const { return value_ == kInf; }
  constexpr std::uint32_t value() const { return value_; }

  constexpr auto operator<=>(const ExtNat&) const = default;

  std::string str() const { return is_inf() ? "inf" : std::to_string(value_); }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = 0;
};

inline constexpr ExtNat kInf = ExtNat::inf();

/// [k,m,n]: head size, positive body size, negative body size.
struct ArityTriple {
  ExtNat k;
  ExtNat m;
  ExtNat n;

  constexpr auto operator<=>(const ArityTriple&) const = default;

  constexpr bool is_superarity() const { return k.is_inf() || m.is_inf() || n.is_inf(); }

  std::string str() const { return "[" + k.str() + "," + m.str() + "," + n.str() + "]"; }
};

enum class Schema { Implicit, Explicit };

/// A finite set of triples read either as the downward-closed class F (implicit)
/// or as the exact class G (explicit). Element order is insertion order;
/// duplicates are dropped.
class AritySet {
 public:
  AritySet() = default;
  AritySet(std::initializer_list<ArityTriple> xs, Schema s = Schema::Implicit) : schema_(s) {
    for (const auto& x : xs) insert(x);
  }
  AritySet(const std::vector<ArityTriple>& xs, Schema s = Schema::Implicit) : schema_(s) {
    for (const auto& x : xs) insert(x);
  }

  Schema schema() const { return schema_; }
  const std::vector<ArityTriple>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  bool contains(const ArityTriple& a) const {
    return std::find(elems_.begin(), elems_.end(), a) != elems_.end();
  }

  void insert(const ArityTriple& a) {
    if (schema_ == Schema::Explicit && a.is_superarity())
      throw InvalidAritySet("explicit arity sets cannot contain superarity " + a.str());
    if (!contains(a)) elems_.push_back(a);
  }

  /// Same elements regardless of order.
  bool same_elements(const AritySet& o) const {
    auto a = elems_, b = o.elems_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ",";
      s += elems_[i].str();
    }
    return s + "}";
  }

 private:
  Schema schema_ = Schema::Implicit;
  std::vector<ArityTriple> elems_;
};

/// a is dominated by b: componentwise <=, and a constraint only under a constraint.
constexpr bool preceq(const ArityTriple& a, const ArityTriple& b) {
  if (!(a.k <= b.k && a.m <= b.m && a.n <= b.n)) return false;
  return a.k != ExtNat(0) || b.k == ExtNat(0);
}

inline bool preceq(const ArityTriple& a, const AritySet& t) {
  return std::any_of(t.elements().begin(), t.elements().end(),
                     [&](const ArityTriple& b) { return preceq(a, b); });
}

/// Every element of d is dominated by some element of t.
inline bool preceq_set(const AritySet& d, const AritySet& t) {
  return std::all_of(d.elements().begin(), d.elements().end(),
                     [&](const ArityTriple& a) { return preceq(a, t); });
}

/// The maximal elements of an implicit set: an antichain defining the same class.
inline AritySet normalize(const AritySet& d) {
  if (d.schema() != Schema::Implicit)
    throw SchemaError("normalize applies to implicit arity sets only");
  std::vector<ArityTriple> out;
  for (const auto& a : d.elements()) {
    bool dominated = std::any_of(d.elements().begin(), d.elements().end(),
                                 [&](const ArityTriple& b) { return a != b && preceq(a, b); });
    if (!dominated) out.push_back(a);
  }
  return AritySet(out, Schema::Implicit);
}

inline bool is_antichain(const AritySet& d) {
  for (const auto& a : d.elements())
    for (const auto& b : d.elements())
      if (a != b && preceq(a, b)) return false;
  return true;
}

// Arity-set documents: {"schema": "implicit"|"explicit", "arities": [[k,m,n], ...]}
// with each component a non-negative integer or the string "inf".

namespace detail {

inline ExtNat ext_from_json(const nlohmann::json& j, Schema schema) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw FormatError("arity component must be an integer or \"inf\"");
    if (schema == Schema::Explicit) throw FormatError("explicit arity sets reject \"inf\"");
    return kInf;
  }
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    if (v >= std::numeric_limits<std::uint32_t>::max()) throw FormatError("arity component too large");
    return ExtNat(static_cast<std::uint32_t>(v));
  }
  throw FormatError("arity component must be a non-negative integer or \"inf\"");
}

inline nlohmann::json ext_to_json(ExtNat e) {
  if (e.is_inf()) return "inf";
  return e.value();
}

}  // namespace detail

inline AritySet arity_set_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FormatError("arity document must be a JSON object");
  if (!doc.contains("schema") || !doc["schema"].is_string()) throw FormatError("missing \"schema\"");
  Schema schema;
  const auto s = doc["schema"].get<std::string>();
  if (s == "implicit") schema = Schema::Implicit;
  else if (s == "explicit") schema = Schema::Explicit;
  else throw FormatError("schema must be \"implicit\" or \"explicit\"");
  if (!doc.contains("arities") || !doc["arities"].is_array()) throw FormatError("missing \"arities\" array");
  std::vector<ArityTriple> elems;
  for (const auto& t : doc["arities"]) {
    if (!t.is_array() || t.size() != 3) throw FormatError("each arity must be a 3-element array");
    elems.push_back({detail::ext_from_json(t[0], schema), detail::ext_from_json(t[1], schema),
                     detail::ext_from_json(t[2], schema)});
  }
  return AritySet(elems, schema);
}

inline AritySet parse_arity_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return arity_set_from_json(doc);
}

inline AritySet load_arity_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_arity_set(ss.str());
}

inline nlohmann::json arity_set_to_json(const AritySet& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : d.elements())
    arr.push_back({detail::ext_to_json(a.k), detail::ext_to_json(a.m), detail::ext_to_json(a.n)});
  nlohmann::json doc;
  doc["schema"] = d.schema() == Schema::Implicit ? "implicit" : "explicit";
  doc["arities"] = std::move(arr);
  return doc;
}

}  // namespace arity_asp
