#include "ciobs/laurent.hpp"

#include <algorithm>
#include <limits>

#include "ciobs/error.hpp"

namespace ciobs {

namespace {

Polynomial times_param_power(const Polynomial& p, std::size_t idx, std::uint32_t k) {
  if (k == 0) return p;
  return p.mul_term(Monomial::variable(p.ring()->nvars(), idx, k), Coef(1));
}

}  // namespace

LaurentElement::LaurentElement(Polynomial base, std::string param, long shift)
    : base_(std::move(base)), param_(std::move(param)), shift_(shift) {
  std::size_t idx = base_.ring()->require_index(param_);
  if (base_.is_zero()) {
    shift_ = 0;
    return;
  }
  std::uint32_t low = std::numeric_limits<std::uint32_t>::max();
  for (const auto& t : base_.terms()) low = std::min(low, t.mono[idx]);
  if (low > 0) {
    std::vector<Term> terms;
    terms.reserve(base_.size());
    for (const auto& t : base_.terms()) {
      auto e = t.mono.exponents();
      e[idx] -= low;
      terms.push_back({Monomial(std::move(e)), t.coef});
    }
    base_ = Polynomial::from_terms(base_.ring(), std::move(terms));
    shift_ += static_cast<long>(low);
  }
}

LaurentElement LaurentElement::param_power(const RingPtr& ring, const std::string& param, long k) {
  return LaurentElement(Polynomial::constant(ring, 1), param, k);
}

long LaurentElement::max_power() const {
  if (base_.is_zero()) return shift_;
  return shift_ + static_cast<long>(base_.degree_in(param_).value());
}

LaurentElement operator+(const LaurentElement& a, const LaurentElement& b) {
  if (a.param_ != b.param_) throw InputError("Laurent parameters differ");
  require_same_ring(a.base_, b.base_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::size_t idx = a.ring()->require_index(a.param_);
  long low = std::min(a.shift_, b.shift_);
  Polynomial sum = times_param_power(a.base_, idx, static_cast<std::uint32_t>(a.shift_ - low)) +
                   times_param_power(b.base_, idx, static_cast<std::uint32_t>(b.shift_ - low));
  return LaurentElement(std::move(sum), a.param_, low);
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  if (a.param_ != b.param_) throw InputError("Laurent parameters differ");
  return LaurentElement(a.base_ * b.base_, a.param_, a.shift_ + b.shift_);
}

LaurentElement LaurentElement::pow(std::uint32_t e) const {
  return LaurentElement(base_.pow(e), param_, shift_ * static_cast<long>(e));
}

Polynomial LaurentElement::specialize(const Coef& c) const {
  const CoefField& field = base_.field();
  Coef v = field.from_rational(c);
  if (sgn(v) == 0) throw DomainError("cannot specialize a Laurent element at 0");
  Coef factor(1);
  Coef step = shift_ >= 0 ? v : field.inv(v);
  for (long i = 0; i < std::labs(shift_); ++i) factor = field.mul(factor, step);
  return base_.specialize(param_, v).scaled(factor);
}

std::string LaurentElement::to_string() const {
  if (shift_ == 0 || is_zero()) return base_.to_string();
  return "(" + base_.to_string() + ")*" + param_ + "^" + std::to_string(shift_);
}

LaurentElement substitute(const Polynomial& p, std::string_view var, const LaurentElement& value) {
  p.ring()->require_index(var);
  const RingPtr& target = value.ring();
  // Group p by powers of var: p = sum_k c_k var^k with var-free c_k.
  Degree d = p.degree_in(var);
  LaurentElement result(Polynomial(target), value.param());
  if (!d.is_finite()) return result;
  LaurentElement power = LaurentElement::param_power(target, value.param(), 0);
  for (std::uint32_t k = 0; k <= d.value(); ++k) {
    Polynomial ck = p.coeff_in(var, k);
    if (!ck.is_zero()) {
      Polynomial lifted = ck.embed(ring_without(p.ring(), {std::string(var)})).embed(target);
      result = result + LaurentElement(lifted, value.param()) * power;
    }
    if (k < d.value()) power = power * value;
  }
  return result;
}

Polynomial clear_laurent(const LaurentElement& l, long exponent) {
  if (l.is_zero()) return l.base();
  long low = l.shift() + exponent;
  if (low < 0) {
    throw InputError("clear_laurent: exponent " + std::to_string(exponent) + " leaves " +
                     l.param() + "^" + std::to_string(low));
  }
  std::size_t idx = l.ring()->require_index(l.param());
  return times_param_power(l.base(), idx, static_cast<std::uint32_t>(low));
}

}  // namespace ciobs
