#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ciobs/field.hpp"
#include "ciobs/ring.hpp"

namespace ciobs {

struct Term {
  Monomial mono;
  Coef coef;
};

/// Exact multivariate polynomial. Terms are kept sorted by descending grevlex
/// with no zero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Coef& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::string_view name, std::uint32_t power = 1);
  static Polynomial monomial(RingPtr ring, Monomial mono, const Coef& c);
  /// Sorts, merges equal monomials and drops zeros; coefficients are
  /// normalized into the ring's field.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Parses the textual grammar (see parse.cpp). Throws InputError.
  static Polynomial parse(std::string_view text, RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const CoefField& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Leading term in grevlex. Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  Degree total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Coef& c) const;
  Polynomial mul_term(const Monomial& m, const Coef& c) const;
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

  /// Specialization var := c; the result lives in the ring without var.
  Polynomial eval_at(std::string_view var, const Coef& c) const;
  /// Specialization var := c, staying in the same ring.
  Polynomial specialize(std::string_view var, const Coef& c) const;
  /// Image under the ring map var -> value fixing the other variables.
  /// `value` must be in the same ring.
  Polynomial substitute(std::string_view var, const Polynomial& value) const;
  /// Simultaneous substitution; `images[i]` replaces variable i. All images
  /// share one target ring.
  Polynomial compose(const std::vector<Polynomial>& images, const RingPtr& target) const;
  /// Re-express in `target` by matching variable names. Throws InputError if
  /// a variable that actually occurs is missing from `target`.
  Polynomial embed(const RingPtr& target) const;

  Degree degree_in(std::string_view var) const;
  /// Leading coefficient in var is exactly the constant 1.
  bool is_monic_in(std::string_view var) const;
  /// Coefficient of var^k, as a polynomial in the same ring (var-free).
  Polynomial coeff_in(std::string_view var, std::uint32_t k) const;
  bool involves(std::string_view var) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Checks that both operands live in the same ring; throws InputError.
void require_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial sum_of_products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                           const RingPtr& ring);

/// Exact quotient a / b when b divides a; nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace ciobs
