#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ciobs/quadric.hpp"

namespace ciobs {

/// Representatives f_1..f_n of a surjection A^n -> I/I^2, with certificates
/// that every generator of I lies in (f) + I^2.
struct LocalOrientation {
  IdealPresentation ideal;   // h_1..h_m
  std::vector<Polynomial> reps;
  /// Presentation of (f) + I^2: reps first, then the products h_k h_l listed
  /// in `square_pairs`.
  IdealPresentation target;
  std::vector<std::pair<std::size_t, std::size_t>> square_pairs;
  std::vector<MembershipCertificate> rep_certs;  // f_i in I
  std::vector<MembershipCertificate> certs;      // h_j in target

  std::size_t n() const noexcept { return reps.size(); }
  const RingPtr& ring() const noexcept { return ideal.ring; }
  IdealPresentation reps_ideal() const { return IdealPresentation(ideal.ring, reps); }
};

/// Throws VerificationError naming the offending f_i or generator (with its
/// normal form) when f is not a local orientation of I.
LocalOrientation verify_orientation(const IdealPresentation& ideal, std::vector<Polynomial> reps);

/// s in I with (1 - s) I inside (f), plus the certificates proving it.
struct NakayamaWitness {
  Polynomial s;
  MembershipCertificate in_ideal;                 // s in I
  std::vector<MembershipCertificate> inclusions;  // (1 - s) h_j in (f)
  std::string method;                             // "trivial", "quotient" or "determinant"
};

/// Tries s = 0, then the I-part of an expression of 1 in ((f) : I) + I, then
/// the determinant of (1 - B) where h = A f + B h comes from the orientation
/// certificates.
NakayamaWitness nakayama_element(const LocalOrientation& o);
/// The determinant route alone.
NakayamaWitness nakayama_element_by_determinant(const LocalOrientation& o);

/// g with sum f_i g_i = s - s^2, read off a membership certificate. Throws
/// VerificationError if s - s^2 is not in (f).
std::vector<Polynomial> cofactors(const LocalOrientation& o, const Polynomial& s);

QuadricPoint to_point(const LocalOrientation& o);
/// Same, reusing an already computed Nakayama witness.
QuadricPoint to_point(const LocalOrientation& o, const NakayamaWitness& w);

/// (f; g; s) -> (f, s), keeping g as the witness.
ForgetPoint forget(const QuadricPoint& v);
/// (f, s) -> (f; g; s) for g from the membership certificate of s - s^2 in (f).
/// Throws VerificationError when no such g exists.
QuadricPoint complete(const ForgetPoint& p);

}  // namespace ciobs
