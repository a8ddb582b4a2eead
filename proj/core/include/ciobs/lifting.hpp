#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ciobs/homotopy.hpp"

namespace ciobs {

/// Certificate that I(v) = (a_1 + mu_1 s^r, ..., a_n + mu_n s^r) for v = (a; g; s).
/// Without r (the plain property) the factor s^r is dropped and every mu_i is
/// additionally certified to lie in I(v)^2.
struct LiftCertificate {
  QuadricPoint point;
  std::vector<Polynomial> mu;
  std::optional<unsigned> r;
  std::vector<MembershipCertificate> forward;       // generators of I(v) in the lifted ideal
  std::vector<MembershipCertificate> backward;      // lifted generators in I(v)
  std::vector<MembershipCertificate> mu_in_square;  // plain only: mu_i in I(v)^2

  bool plain() const noexcept { return !r.has_value(); }
  /// a_i + mu_i s^r, or a_i + mu_i for the plain property.
  std::vector<Polynomial> lifted() const;
};

/// Throws VerificationError naming the failing direction and generator.
LiftCertificate verify_r_lift(const QuadricPoint& v, const std::vector<Polynomial>& mu, unsigned r);
LiftCertificate verify_lift(const QuadricPoint& v, const std::vector<Polynomial>& mu);
/// Re-checks every stored certificate against the stored data.
std::optional<Violation> check_lift(const LiftCertificate& cert);

/// v -> (a + mu; 0; 0) -> 0 for a plain certificate.
HomotopyChain lift_to_chain(const LiftCertificate& cert);

/// For H = (f(T); g(T); s) with s free of T and F over the same ring: checks
/// I(0) = (f(0)), I(T) = (F) and s^2 | f_i - F_i.
std::optional<Violation> verify_deformation(const HomotopyPoint& h, const std::vector<Polynomial>& big_f);

struct LiftSearchOptions {
  unsigned degree_bound = 2;
  std::vector<Coef> pool{Coef(-1), Coef(0), Coef(1)};
  std::size_t max_candidates = 100000;
};

struct LiftSearchResult {
  std::optional<LiftCertificate> certificate;
  std::vector<Polynomial> products;  // the products of pairs of generators used as the basis
  std::size_t space_size;            // saturates at SIZE_MAX
  std::size_t tried;
};

/// Brute force over mu_i = sum c_k p_k with c_k from the pool and p_k the
/// products of two generators of I(v) of degree at most the bound. Candidates
/// are visited by number of nonzero coefficients, then positions in
/// lexicographic order, then pool order; the first hit is returned.
LiftSearchResult search_lift(const QuadricPoint& v, const LiftSearchOptions& options = {});

}  // namespace ciobs
