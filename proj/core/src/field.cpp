#include "ciobs/field.hpp"

#include "ciobs/error.hpp"

namespace ciobs {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

CoefField CoefField::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  if (p > (1ULL << 31)) throw InputError("field modulus too large (limit 2^31)");
  return CoefField(p);
}

CoefField CoefField::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad field specifier '" + text + "'");
    }
    return prime(std::stoull(digits));
  }
  throw InputError("bad field specifier '" + text + "' (expected Q or Fp:p)");
}

std::string CoefField::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

void CoefField::reduce(mpq_class& v) const {
  mpz_class r = v.get_num() % modulus_;
  if (r < 0) r += modulus_;
  v = mpq_class(r);
}

Coef CoefField::from_rational(const mpq_class& q) const {
  if (is_rational()) {
    Coef c(q);
    c.canonicalize();
    return c;
  }
  mpz_class num = q.get_num() % modulus_;
  mpz_class den = q.get_den() % modulus_;
  if (den < 0) den += modulus_;
  if (den == 0) {
    throw InputError("coefficient " + q.get_str() + " is not invertible in " + to_string());
  }
  mpz_class inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  mpq_class out(mpz_class(num * inv_den));
  reduce(out);
  return out;
}

Coef CoefField::add(const Coef& a, const Coef& b) const {
  Coef r = a + b;
  if (!is_rational()) reduce(r);
  return r;
}

Coef CoefField::sub(const Coef& a, const Coef& b) const {
  Coef r = a - b;
  if (!is_rational()) reduce(r);
  return r;
}

Coef CoefField::mul(const Coef& a, const Coef& b) const {
  Coef r = a * b;
  if (!is_rational()) reduce(r);
  return r;
}

Coef CoefField::neg(const Coef& a) const {
  Coef r = -a;
  if (!is_rational()) reduce(r);
  return r;
}

Coef CoefField::inv(const Coef& a) const {
  if (sgn(a) == 0) throw DomainError("inverse of zero");
  if (is_rational()) return Coef(1) / a;
  mpz_class r;
  mpz_class v = a.get_num();
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return mpq_class(r);
}

}  // namespace ciobs
