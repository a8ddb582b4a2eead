#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ciobs {

using Coef = mpq_class;

/// Coefficient field: the rationals or a prime field F_p. Elements of F_p are
/// stored as integral mpq values in [0, p).
class CoefField {
 public:
  static CoefField rationals() { return CoefField(0); }
  static CoefField prime(std::uint64_t p);
  /// "Q" or "Fp:p".
  static CoefField parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_infinite() const noexcept { return p_ == 0; }

  /// Brings an arbitrary rational into canonical form for this field.
  /// Throws InputError if the denominator vanishes mod p.
  Coef from_rational(const mpq_class& q) const;
  Coef from_int(long v) const { return from_rational(mpq_class(v)); }

  Coef add(const Coef& a, const Coef& b) const;
  Coef sub(const Coef& a, const Coef& b) const;
  Coef mul(const Coef& a, const Coef& b) const;
  Coef neg(const Coef& a) const;
  /// Throws DomainError on zero.
  Coef inv(const Coef& a) const;
  Coef div(const Coef& a, const Coef& b) const { return mul(a, inv(b)); }

  std::string to_string() const;
  std::string format(const Coef& c) const { return c.get_str(); }

  friend bool operator==(const CoefField& a, const CoefField& b) { return a.p_ == b.p_; }

 private:
  explicit CoefField(std::uint64_t p) : p_(p), modulus_(static_cast<unsigned long>(p)) {}
  void reduce(mpq_class& v) const;

  std::uint64_t p_;
  mpz_class modulus_;
};

}  // namespace ciobs
