#include "ciobs/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "ciobs/error.hpp"

namespace ciobs {

namespace {

bool term_desc(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

// Merge of two grevlex-descending term lists: a + sign*b.
std::vector<Term> merge_terms(const CoefField& field, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coef) : b[j].coef});
      ++j;
    } else {
      Coef s = subtract ? field.sub(a[i].coef, b[j].coef) : field.add(a[i].coef, b[j].coef);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? field.neg(b[j].coef) : b[j].coef});
  return out;
}

}  // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw InputError("ring mismatch: " + a.ring()->to_string() + " vs " + b.ring()->to_string());
  }
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Coef& c) {
  Polynomial p(std::move(ring));
  Coef v = p.field().from_rational(c);
  if (sgn(v) != 0) p.terms_.push_back({Monomial(p.ring_->nvars()), std::move(v)});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) { return constant(std::move(ring), Coef(c)); }

Polynomial Polynomial::variable(RingPtr ring, std::string_view name, std::uint32_t power) {
  std::size_t idx = ring->require_index(name);
  Monomial m = Monomial::variable(ring->nvars(), idx, power);
  return monomial(std::move(ring), std::move(m), Coef(1));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial mono, const Coef& c) {
  Polynomial p(std::move(ring));
  Coef v = p.field().from_rational(c);
  if (sgn(v) != 0) p.terms_.push_back({std::move(mono), std::move(v)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const CoefField& field = p.field();
  for (auto& t : terms) t.coef = field.from_rational(t.coef);
  std::sort(terms.begin(), terms.end(), term_desc);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = field.add(p.terms_.back().coef, t.coef);
      if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(terms_.front().mono.degree());
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = field().neg(t.coef);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(field(), terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(field(), terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coef);
  const CoefField& field = a.field();
  std::unordered_map<Monomial, Coef, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto [it, inserted] = acc.try_emplace(std::move(m));
      if (inserted) {
        it->second = field.mul(ta.coef, tb.coef);
      } else {
        it->second = field.add(it->second, field.mul(ta.coef, tb.coef));
      }
    }
  }
  Polynomial r(a.ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_desc);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Coef& c) const {
  Coef v = field().from_rational(c);
  if (sgn(v) == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = field().mul(t.coef, v);
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Coef& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coef, c)});
  // Multiplying by a monomial preserves grevlex order.
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& vars = ring_->vars();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    bool negative = sgn(t.coef) < 0;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Coef mag = negative ? Coef(-t.coef) : t.coef;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

Polynomial Polynomial::specialize(std::string_view var, const Coef& c) const {
  std::size_t idx = ring_->require_index(var);
  Coef v = field().from_rational(c);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = t.mono.exponents();
    std::uint32_t k = e[idx];
    e[idx] = 0;
    Coef coef = t.coef;
    if (k > 0) {
      Coef pw(1);
      for (std::uint32_t i = 0; i < k; ++i) pw = field().mul(pw, v);
      coef = field().mul(coef, pw);
    }
    out.push_back({Monomial(std::move(e)), std::move(coef)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::eval_at(std::string_view var, const Coef& c) const {
  RingPtr smaller = ring_without(ring_, {std::string(var)});
  return specialize(var, c).embed(smaller);
}

Polynomial Polynomial::substitute(std::string_view var, const Polynomial& value) const {
  require_same_ring(*this, value);
  std::size_t idx = ring_->require_index(var);
  std::vector<Polynomial> images;
  images.reserve(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    images.push_back(i == idx ? value : variable(ring_, ring_->vars()[i]));
  }
  return compose(images, ring_);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images, const RingPtr& target) const {
  if (images.size() != ring_->nvars()) throw InputError("compose: one image per variable required");
  for (const auto& im : images) {
    if (!same_ring(im.ring(), target)) throw InputError("compose: images must share the target ring");
  }
  if (!(target->field() == field())) throw InputError("compose: field mismatch");
  // Cache powers of each image as they are needed.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t i = 0; i < t.mono.size() && !term.is_zero(); ++i) {
      if (t.mono[i] > 0) term *= power_of(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  if (!(target->field() == field())) throw InputError("embed: field mismatch");
  std::vector<std::optional<std::size_t>> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->index_of(ring_->vars()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial::Exponents e(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) {
        throw InputError("variable '" + ring_->vars()[i] + "' does not exist in " + target->to_string());
      }
      e[*map[i]] = t.mono[i];
    }
    out.push_back({Monomial(std::move(e)), t.coef});
  }
  return from_terms(target, std::move(out));
}

Degree Polynomial::degree_in(std::string_view var) const {
  std::size_t idx = ring_->require_index(var);
  if (terms_.empty()) return Degree::neg_infinity();
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[idx]);
  return Degree(d);
}

Polynomial Polynomial::coeff_in(std::string_view var, std::uint32_t k) const {
  std::size_t idx = ring_->require_index(var);
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono[idx] != k) continue;
    auto e = t.mono.exponents();
    e[idx] = 0;
    r.terms_.push_back({Monomial(std::move(e)), t.coef});
  }
  // Clearing one exponent can break grevlex order between terms.
  std::sort(r.terms_.begin(), r.terms_.end(), term_desc);
  return r;
}

bool Polynomial::is_monic_in(std::string_view var) const {
  Degree d = degree_in(var);
  if (!d.is_finite()) return false;
  return coeff_in(var, d.value()).is_one();
}

bool Polynomial::involves(std::string_view var) const {
  std::size_t idx = ring_->require_index(var);
  for (const auto& t : terms_) {
    if (t.mono[idx] != 0) return true;
  }
  return false;
}

Polynomial sum_of_products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                           const RingPtr& ring) {
  if (a.size() != b.size()) throw InputError("sum_of_products: length mismatch");
  Polynomial acc(ring);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (b.is_zero()) {
    if (a.is_zero()) return Polynomial(a.ring());
    return std::nullopt;
  }
  const CoefField& field = a.field();
  const Term& lead = b.leading_term();
  Coef inv_lead = field.inv(lead.coef);
  Polynomial rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.mono.divides(t.mono)) return std::nullopt;
    Monomial m = t.mono / lead.mono;
    Coef c = field.mul(t.coef, inv_lead);
    rem -= b.mul_term(m, c);
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

}  // namespace ciobs
