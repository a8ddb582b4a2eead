#include "ciobs/orientation.hpp"

#include <algorithm>

#include "ciobs/error.hpp"

namespace ciobs {

namespace {

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

// Checks s in I and (1 - s) h_j in (f) for all j; nullopt if any fails.
std::optional<NakayamaWitness> certify_nakayama(const LocalOrientation& o, const ReducedGroebnerBasis& gb_f,
                                                Polynomial s, MembershipCertificate in_ideal, std::string method) {
  if (!in_ideal.holds(o.ideal)) return std::nullopt;
  NakayamaWitness w{std::move(s), std::move(in_ideal), {}, std::move(method)};
  Polynomial unit_minus_s = one(o.ring()) - w.s;
  for (const auto& h : o.ideal.gens) {
    auto m = membership(unit_minus_s * h, gb_f);
    if (!m) return std::nullopt;
    w.inclusions.push_back(std::move(*m.certificate));
  }
  return w;
}

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Polynomial determinant(std::vector<std::vector<Polynomial>> a, const RingPtr& ring) {
  const std::size_t n = a.size();
  if (n == 0) return one(ring);
  Polynomial prev = one(ring);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ring);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw VerificationError("Bareiss step not exact", num.to_string());
        a[i][j] = std::move(*q);
      }
    }
    prev = a[k][k];
  }
  Polynomial d = a[n - 1][n - 1];
  return negate ? -d : d;
}

// Determinant trick: h = A f + B h with B over I gives det(1 - B) h in (f).
std::optional<NakayamaWitness> nakayama_by_determinant(const LocalOrientation& o,
                                                       const ReducedGroebnerBasis& gb_f) {
  const RingPtr& ring = o.ring();
  const std::size_t m = o.ideal.size();
  const std::size_t n = o.n();
  std::vector<std::vector<Polynomial>> mat(m, std::vector<Polynomial>(m, Polynomial(ring)));
  for (std::size_t j = 0; j < m; ++j) {
    mat[j][j] = one(ring);
    const auto& coeffs = o.certs[j].coefficients;
    for (std::size_t p = 0; p < o.square_pairs.size(); ++p) {
      const auto& c = coeffs[n + p];
      if (c.is_zero()) continue;
      auto [k, l] = o.square_pairs[p];
      // c * h_k * h_l contributes (c * h_l) to column k.
      mat[j][k] -= c * o.ideal.gens[l];
    }
  }
  Polynomial s = one(ring) - determinant(std::move(mat), ring);
  auto in_ideal = membership(s, o.ideal);
  if (!in_ideal) return std::nullopt;
  return certify_nakayama(o, gb_f, s, std::move(*in_ideal.certificate), "determinant");
}

}  // namespace

LocalOrientation verify_orientation(const IdealPresentation& ideal, std::vector<Polynomial> reps) {
  if (reps.empty()) throw InputError("orientation needs at least one representative");
  for (const auto& f : reps) {
    if (!same_ring(f.ring(), ideal.ring)) throw InputError("orientation: representative outside the ideal's ring");
  }
  const RingPtr& ring = ideal.ring;
  auto gb_i = groebner(ideal);
  std::vector<MembershipCertificate> rep_certs;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    rep_certs.push_back(certify_member(reps[i], gb_i, "representative f" + std::to_string(i + 1) + " in I"));
  }
  std::vector<Polynomial> target_gens = reps;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Polynomial> squares;
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    for (std::size_t l = k; l < ideal.size(); ++l) {
      Polynomial p = ideal.gens[k] * ideal.gens[l];
      if (p.is_zero() || std::find(squares.begin(), squares.end(), p) != squares.end()) continue;
      squares.push_back(p);
      pairs.emplace_back(k, l);
    }
  }
  target_gens.insert(target_gens.end(), squares.begin(), squares.end());
  IdealPresentation target(ring, std::move(target_gens));
  auto gb_t = groebner(target);
  std::vector<MembershipCertificate> certs;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    certs.push_back(certify_member(ideal.gens[j], gb_t,
                                   "generator " + ideal.gens[j].to_string() + " in (f) + I^2"));
  }
  return LocalOrientation{ideal, std::move(reps), std::move(target), std::move(pairs),
                          std::move(rep_certs), std::move(certs)};
}

NakayamaWitness nakayama_element(const LocalOrientation& o) {
  const RingPtr& ring = o.ring();
  IdealPresentation f = o.reps_ideal();
  auto gb_f = groebner(f);
  const bool f_is_zero = f.all_zero();

  // I already equals (f): s = 0 works.
  if (std::all_of(o.ideal.gens.begin(), o.ideal.gens.end(),
                  [&](const Polynomial& h) { return static_cast<bool>(membership(h, gb_f)); })) {
    MembershipCertificate zero_cert{Polynomial(ring), std::vector<Polynomial>(o.ideal.size(), Polynomial(ring))};
    if (auto w = certify_nakayama(o, gb_f, Polynomial(ring), std::move(zero_cert), "trivial")) return std::move(*w);
  }

  // 1 in ((f) : I) + I; the I-part of an expression of 1 is s.
  if (!f_is_zero && !o.ideal.all_zero()) {
    IdealPresentation quotient = ideal_quotient(f, o.ideal);
    std::vector<Polynomial> combined = quotient.gens;
    combined.insert(combined.end(), o.ideal.gens.begin(), o.ideal.gens.end());
    auto unit = membership(one(ring), IdealPresentation(ring, combined));
    if (unit) {
      const auto& c = unit.certificate->coefficients;
      std::vector<Polynomial> coeffs(c.begin() + static_cast<long>(quotient.size()), c.end());
      Polynomial s = sum_of_products(coeffs, o.ideal.gens, ring);
      if (auto w = certify_nakayama(o, gb_f, s, MembershipCertificate{s, coeffs}, "quotient")) return std::move(*w);
    }
  }

  if (auto w = nakayama_by_determinant(o, gb_f)) return std::move(*w);
  throw VerificationError("no Nakayama element found for a certified orientation", "");
}

NakayamaWitness nakayama_element_by_determinant(const LocalOrientation& o) {
  auto w = nakayama_by_determinant(o, groebner(o.reps_ideal()));
  if (!w) throw VerificationError("determinant construction failed to certify", "");
  return std::move(*w);
}

std::vector<Polynomial> cofactors(const LocalOrientation& o, const Polynomial& s) {
  Polynomial target = s - s * s;
  return certify_member(target, o.reps_ideal(), "s - s^2 in (f)").coefficients;
}

QuadricPoint to_point(const LocalOrientation& o, const NakayamaWitness& w) {
  QuadricPoint v(o.ring(), o.reps, cofactors(o, w.s), w.s);
  if (auto bad = validate_point(v)) throw VerificationError("assembled point", bad->residual.to_string());
  return v;
}

QuadricPoint to_point(const LocalOrientation& o) { return to_point(o, nakayama_element(o)); }

ForgetPoint forget(const QuadricPoint& v) { return ForgetPoint{v.ring, v.f, v.s, v.g}; }

QuadricPoint complete(const ForgetPoint& p) {
  if (p.f.empty()) throw InputError("complete: empty f");
  IdealPresentation f(p.ring, p.f);
  Polynomial target = p.s - p.s * p.s;
  auto g = certify_member(target, f, "s - s^2 in (f): point is not in Q_n(A)").coefficients;
  return QuadricPoint(p.ring, p.f, std::move(g), p.s);
}

}  // namespace ciobs
