#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ciobs/polynomial.hpp"

namespace ciobs {

/// A finite generating list of an ideal. Zero and repeated generators are
/// kept so certificate columns stay aligned with the list as given.
struct IdealPresentation {
  IdealPresentation(RingPtr ring, std::vector<Polynomial> gens);
  static IdealPresentation parse(const RingPtr& ring, const std::vector<std::string>& gens);

  RingPtr ring;
  std::vector<Polynomial> gens;

  std::size_t size() const noexcept { return gens.size(); }
  bool all_zero() const;
  std::vector<std::string> to_strings() const;
};

/// target = sum_j coefficients[j] * generators[j], checked by re-multiplying.
struct MembershipCertificate {
  Polynomial target;
  std::vector<Polynomial> coefficients;

  /// target - sum coefficients * gens; zero iff the certificate holds.
  Polynomial residual(const IdealPresentation& ideal) const;
  bool holds(const IdealPresentation& ideal) const { return residual(ideal).is_zero(); }
};

/// Reduced Groebner basis with basis[i] = sum_j cofactors[i][j] * generators[j].
/// Basis elements are monic and sorted by increasing leading monomial in
/// `order`; the generator list is the presentation it was computed from.
struct ReducedGroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_one(); }
  /// Leading monomial of each basis element under `order`.
  std::vector<Monomial> leads;

  /// Exact re-multiplication of every cofactor row.
  bool cofactor_identity_holds() const;
};

ReducedGroebnerBasis groebner(const IdealPresentation& ideal,
                              const MonomialOrder& order = MonomialOrder::grevlex());

struct NormalForm {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per basis element
};

NormalForm normal_form(const Polynomial& p, const ReducedGroebnerBasis& gb);

/// Either a certificate in terms of the original generators, or the nonzero
/// normal form witnessing non-membership.
struct MembershipResult {
  std::optional<MembershipCertificate> certificate;
  Polynomial remainder;

  explicit operator bool() const noexcept { return certificate.has_value(); }
};

MembershipResult membership(const Polynomial& p, const ReducedGroebnerBasis& gb);
MembershipResult membership(const Polynomial& p, const IdealPresentation& ideal);

/// membership() that throws VerificationError (carrying the normal form) when
/// p is not a member. `what` names the claim for the message.
MembershipCertificate certify_member(const Polynomial& p, const ReducedGroebnerBasis& gb,
                                     const std::string& what);
MembershipCertificate certify_member(const Polynomial& p, const IdealPresentation& ideal,
                                     const std::string& what);

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b);
IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b);
/// Products h_i*h_j for i <= j, without zero or repeated entries.
IdealPresentation ideal_square(const IdealPresentation& a);
IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b);
/// (a : b) = { p : p*b in a }. Generators are the reduced grevlex basis.
IdealPresentation ideal_quotient(const IdealPresentation& a, const IdealPresentation& b);
/// (a : f^infinity), via a fresh variable w and elimination of w from a + (w*f - 1).
IdealPresentation saturate(const IdealPresentation& a, const Polynomial& f);
/// a intersected with the subring without `vars`; lives in that subring.
IdealPresentation eliminate(const IdealPresentation& a, const std::vector<std::string>& vars);
/// Kernel of source -> target, source variable i |-> images[i]; lives in source.
IdealPresentation kernel_of_map(const RingPtr& source, const RingPtr& target,
                                const std::vector<Polynomial>& images);
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b);
/// Every generator of `inner` lies in `outer`.
bool ideal_contains(const IdealPresentation& outer, const IdealPresentation& inner);

}  // namespace ciobs
