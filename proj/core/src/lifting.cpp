#include "ciobs/lifting.hpp"

#include <algorithm>
#include <limits>

#include "ciobs/error.hpp"

namespace ciobs {

namespace {

std::vector<Polynomial> lift_gens(const QuadricPoint& v, const std::vector<Polynomial>& mu,
                                  const std::optional<unsigned>& r) {
  Polynomial factor = r ? v.s.pow(*r) : Polynomial::constant(v.ring, 1);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < v.n(); ++i) out.push_back(v.f[i] + mu[i] * factor);
  return out;
}

LiftCertificate certify(const QuadricPoint& v, const std::vector<Polynomial>& mu, std::optional<unsigned> r) {
  if (mu.size() != v.n()) throw InputError("lift: mu must have " + std::to_string(v.n()) + " entries");
  for (const auto& m : mu) {
    if (!same_ring(m.ring(), v.ring)) throw InputError("lift: mu outside the point's ring");
  }
  if (r && *r == 0) throw InputError("lift: r must be positive");
  if (auto bad = validate_point(v)) throw VerificationError("lift: point is not on the quadric", bad->residual.to_string());

  LiftCertificate cert{v, mu, r, {}, {}, {}};
  IdealPresentation iv = ideal_of(v);
  IdealPresentation lifted(v.ring, lift_gens(v, mu, r));
  if (!r) {
    auto gb_sq = groebner(ideal_square(iv));
    for (std::size_t i = 0; i < mu.size(); ++i) {
      cert.mu_in_square.push_back(certify_member(mu[i], gb_sq, "lift: mu" + std::to_string(i + 1) + " in I(v)^2"));
    }
  }
  auto gb_lifted = groebner(lifted);
  for (std::size_t j = 0; j < iv.size(); ++j) {
    cert.forward.push_back(certify_member(iv.gens[j], gb_lifted,
                                          "lift: generator " + std::to_string(j + 1) + " of I(v) in the lifted ideal"));
  }
  auto gb_iv = groebner(iv);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    cert.backward.push_back(certify_member(lifted.gens[i], gb_iv,
                                           "lift: lifted generator " + std::to_string(i + 1) + " in I(v)"));
  }
  return cert;
}

}  // namespace

std::vector<Polynomial> LiftCertificate::lifted() const { return lift_gens(point, mu, r); }

LiftCertificate verify_r_lift(const QuadricPoint& v, const std::vector<Polynomial>& mu, unsigned r) {
  if (r == 0) throw InputError("verify_r_lift: r must be positive");
  return certify(v, mu, r);
}

LiftCertificate verify_lift(const QuadricPoint& v, const std::vector<Polynomial>& mu) {
  return certify(v, mu, std::nullopt);
}

std::optional<Violation> check_lift(const LiftCertificate& cert) {
  const auto& v = cert.point;
  if (auto bad = validate_point(v)) return Violation{"point is not on the quadric: " + bad->what, bad->residual};
  if (cert.mu.size() != v.n()) return Violation{"mu has the wrong length", Polynomial(v.ring)};
  IdealPresentation iv = ideal_of(v);
  IdealPresentation lifted(v.ring, cert.lifted());
  if (cert.forward.size() != iv.size() || cert.backward.size() != lifted.size()) {
    return Violation{"certificate count mismatch", Polynomial(v.ring)};
  }
  for (std::size_t j = 0; j < iv.size(); ++j) {
    if (cert.forward[j].target != iv.gens[j]) return Violation{"forward certificate targets the wrong generator", cert.forward[j].target};
    auto res = cert.forward[j].residual(lifted);
    if (!res.is_zero()) return Violation{"forward certificate " + std::to_string(j + 1) + " fails", res};
  }
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (cert.backward[i].target != lifted.gens[i]) return Violation{"backward certificate targets the wrong generator", cert.backward[i].target};
    auto res = cert.backward[i].residual(iv);
    if (!res.is_zero()) return Violation{"backward certificate " + std::to_string(i + 1) + " fails", res};
  }
  if (cert.plain()) {
    if (cert.mu_in_square.size() != cert.mu.size()) return Violation{"missing mu in I^2 certificates", Polynomial(v.ring)};
    IdealPresentation sq = ideal_square(iv);
    for (std::size_t i = 0; i < cert.mu.size(); ++i) {
      if (cert.mu_in_square[i].target != cert.mu[i]) return Violation{"square certificate targets the wrong mu", cert.mu_in_square[i].target};
      auto res = cert.mu_in_square[i].residual(sq);
      if (!res.is_zero()) return Violation{"mu" + std::to_string(i + 1) + " in I^2 certificate fails", res};
    }
  }
  return std::nullopt;
}

HomotopyChain lift_to_chain(const LiftCertificate& cert) {
  if (!cert.plain()) throw InputError("lift_to_chain: needs a plain lift certificate");
  if (auto bad = check_lift(cert)) throw VerificationError("lift_to_chain: " + bad->what, bad->residual.to_string());
  const QuadricPoint& v = cert.point;
  QuadricPoint moved(v.ring, cert.lifted(), std::vector<Polynomial>(v.n(), Polynomial(v.ring)), Polynomial(v.ring));
  HomotopyChain tail = chain_of(scale_f_to_zero(moved));
  if (moved == v) return tail;
  return chain_concat(connect_same_orientation(v, moved), tail);
}

std::optional<Violation> verify_deformation(const HomotopyPoint& h, const std::vector<Polynomial>& big_f) {
  const auto& p = h.point;
  const RingPtr& r = h.ring();
  if (big_f.size() != p.n()) return Violation{"F has the wrong length", Polynomial(r)};
  if (p.s.involves(h.param)) return Violation{"s depends on " + h.param, p.s};
  if (auto bad = validate_homotopy(h)) return bad;

  QuadricPoint at0 = endpoint(h, 0);
  IdealPresentation a(at0.ring, at0.f);
  auto gb_a = groebner(a);
  if (auto m = membership(at0.s, gb_a); !m) return Violation{"I(0) is not (f(0)): s not in (f(0))", m.remainder};

  IdealPresentation it(r, p.f);
  it.gens.push_back(p.s);
  IdealPresentation fi(r, big_f);
  auto gb_f = groebner(fi);
  for (std::size_t j = 0; j < it.size(); ++j) {
    if (auto m = membership(it.gens[j], gb_f); !m) {
      return Violation{"generator " + std::to_string(j + 1) + " of I(T) not in (F)", m.remainder};
    }
  }
  auto gb_it = groebner(it);
  for (std::size_t i = 0; i < big_f.size(); ++i) {
    if (auto m = membership(big_f[i], gb_it); !m) return Violation{"F" + std::to_string(i + 1) + " not in I(T)", m.remainder};
  }

  Polynomial s2 = p.s * p.s;
  for (std::size_t i = 0; i < big_f.size(); ++i) {
    Polynomial d = p.f[i] - big_f[i];
    if (d.is_zero()) continue;
    if (s2.is_zero() || !divide_exact(d, s2)) {
      return Violation{"f" + std::to_string(i + 1) + " - F" + std::to_string(i + 1) + " is not divisible by s^2", d};
    }
  }
  return std::nullopt;
}

namespace {

std::size_t saturating_pow(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    out *= base;
  }
  return out;
}

// Advances `pos` to the next w-subset of {0..slots-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& pos, std::size_t slots) {
  const std::size_t w = pos.size();
  for (std::size_t k = w; k-- > 0;) {
    if (pos[k] < slots - w + k) {
      ++pos[k];
      for (std::size_t j = k + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool next_digits(std::vector<std::size_t>& digits, std::size_t radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace

LiftSearchResult search_lift(const QuadricPoint& v, const LiftSearchOptions& options) {
  if (auto bad = validate_point(v)) throw VerificationError("search_lift: point is not on the quadric", bad->residual.to_string());
  const RingPtr& ring = v.ring;
  IdealPresentation iv = ideal_of(v);

  std::vector<Polynomial> products;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    for (std::size_t j = i; j < iv.size(); ++j) {
      Polynomial p = iv.gens[i] * iv.gens[j];
      if (p.is_zero() || p.total_degree().value() > options.degree_bound) continue;
      if (std::find(products.begin(), products.end(), p) == products.end()) products.push_back(std::move(p));
    }
  }
  std::vector<Coef> values;
  for (const auto& c : options.pool) {
    Coef x = ring->field().from_rational(c);
    if (sgn(x) != 0 && std::find(values.begin(), values.end(), x) == values.end()) values.push_back(x);
  }

  const std::size_t k = products.size();
  const std::size_t slots = v.n() * k;
  LiftSearchResult result{std::nullopt, products, saturating_pow(values.size() + 1, slots), 0};
  auto gb_iv = groebner(iv);

  auto try_candidate = [&](const std::vector<std::size_t>& pos, const std::vector<std::size_t>& digits) {
    std::vector<Polynomial> mu(v.n(), Polynomial(ring));
    for (std::size_t q = 0; q < pos.size(); ++q) {
      mu[pos[q] / k] += products[pos[q] % k].scaled(values[digits[q]]);
    }
    ++result.tried;
    std::vector<Polynomial> lifted;
    for (std::size_t i = 0; i < v.n(); ++i) lifted.push_back(v.f[i] + mu[i]);
    auto gb = groebner(IdealPresentation(ring, lifted));
    for (const auto& h : iv.gens) {
      if (!membership(h, gb)) return false;
    }
    result.certificate = verify_lift(v, mu);
    return true;
  };

  const std::size_t max_weight = values.empty() ? 0 : slots;
  for (std::size_t w = 0; w <= max_weight; ++w) {
    std::vector<std::size_t> pos(w);
    for (std::size_t q = 0; q < w; ++q) pos[q] = q;
    do {
      std::vector<std::size_t> digits(w, 0);
      do {
        if (result.tried >= options.max_candidates) return result;
        if (try_candidate(pos, digits)) return result;
      } while (next_digits(digits, values.size()));
    } while (w > 0 && next_combination(pos, slots));
  }
  return result;
}

}  // namespace ciobs
