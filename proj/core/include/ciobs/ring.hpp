#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "ciobs/field.hpp"

namespace ciobs {

/// Exponent vector with its cached total degree.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exponents exps);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  const Exponents& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) the other way round: returns this / other.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  std::size_t hash() const noexcept;

 private:
  Exponents exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded reverse lexicographic comparison; the canonical term order.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// Exact degree with a distinguished -infinity for the zero polynomial.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(std::uint32_t v) : value_(v) {}

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  std::uint32_t value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

  friend bool operator==(const Degree& a, const Degree& b) { return a.value_ == b.value_; }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!a.value_) return b.value_.has_value();
    return b.value_ && *a.value_ < *b.value_;
  }

 private:
  Degree() = default;
  std::optional<std::uint32_t> value_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Coefficient field plus an ordered list of distinct variable names.
class PolyRing {
 public:
  static RingPtr make(CoefField field, std::vector<std::string> vars);

  const CoefField& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws InputError("unknown variable").
  std::size_t require_index(std::string_view name) const;
  bool has_var(std::string_view name) const { return index_of(name).has_value(); }

  /// A name not yet used in this ring: `base`, then base1, base2, ...
  std::string fresh_name(const std::string& base) const;

  std::string to_string() const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  PolyRing(CoefField field, std::vector<std::string> vars)
      : field_(std::move(field)), vars_(std::move(vars)) {}

  CoefField field_;
  std::vector<std::string> vars_;
};

/// Appends `name` (which must be fresh) after the existing variables.
RingPtr extend_ring(const RingPtr& ring, const std::string& name);
/// Drops the named variables, keeping the order of the rest.
RingPtr ring_without(const RingPtr& ring, const std::vector<std::string>& names);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Monomial order descriptor; bind it to a ring with BoundOrder before use.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  /// Block order: grevlex on `block`, ties broken by grevlex on the rest.
  static MonomialOrder elimination(std::vector<std::string> block) {
    return MonomialOrder(Kind::elimination, std::move(block));
  }
  /// "lex", "grevlex" or "elim:v1,v2".
  static MonomialOrder parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::string>& block() const noexcept { return block_; }
  std::string to_string() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::string> block) : kind_(kind), block_(std::move(block)) {}

  Kind kind_;
  std::vector<std::string> block_;
};

class BoundOrder {
 public:
  BoundOrder(const MonomialOrder& order, const PolyRing& ring);

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  MonomialOrder::Kind kind_;
  std::vector<bool> in_block_;
};

}  // namespace ciobs
