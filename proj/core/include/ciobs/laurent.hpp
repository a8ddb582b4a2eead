#pragma once

#include <string>

#include "ciobs/polynomial.hpp"

namespace ciobs {

/// base * param^shift, an element of R[param, param^-1]. Normalized so that
/// param does not divide base (zero has shift 0).
class LaurentElement {
 public:
  LaurentElement(Polynomial base, std::string param, long shift = 0);
  /// param^k in `ring`, which must contain param.
  static LaurentElement param_power(const RingPtr& ring, const std::string& param, long k);

  const Polynomial& base() const noexcept { return base_; }
  long shift() const noexcept { return shift_; }
  const std::string& param() const noexcept { return param_; }
  const RingPtr& ring() const noexcept { return base_.ring(); }
  bool is_zero() const noexcept { return base_.is_zero(); }

  /// Smallest power of param occurring.
  long min_power() const noexcept { return shift_; }
  /// Largest power of param occurring; equals shift for zero.
  long max_power() const;

  LaurentElement operator-() const { return {-base_, param_, shift_}; }
  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) { return a + (-b); }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  LaurentElement pow(std::uint32_t e) const;

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.param_ == b.param_ && a.shift_ == b.shift_ && a.base_ == b.base_;
  }

  /// Specialize param := c (c nonzero), staying in the same ring.
  Polynomial specialize(const Coef& c) const;
  std::string to_string() const;

 private:
  Polynomial base_;
  std::string param_;
  long shift_;
};

/// Image of p under var -> value; the other variables are fixed. p is
/// embedded into value's ring first.
LaurentElement substitute(const Polynomial& p, std::string_view var, const LaurentElement& value);

/// l * param^exponent as an honest polynomial. Throws InputError when negative
/// powers of param would remain.
Polynomial clear_laurent(const LaurentElement& l, long exponent);

}  // namespace ciobs
