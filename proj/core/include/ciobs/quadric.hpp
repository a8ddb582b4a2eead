#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ciobs/ideal.hpp"

namespace ciobs {

/// (f_1..f_n; g_1..g_n; s) with sum f_i g_i + s(s-1) = 0, a point of the
/// affine quadric Q_2n over the ring.
struct QuadricPoint {
  QuadricPoint(RingPtr ring, std::vector<Polynomial> f, std::vector<Polynomial> g, Polynomial s);
  static QuadricPoint zero(const RingPtr& ring, std::size_t n);

  RingPtr ring;
  std::vector<Polynomial> f;
  std::vector<Polynomial> g;
  Polynomial s;

  std::size_t n() const noexcept { return f.size(); }
  /// sum f_i g_i + s(s-1); zero exactly on valid points.
  Polynomial residual() const;
  bool is_zero() const;
  /// Coordinates in the order f, g, s.
  std::vector<Polynomial> coordinates() const;
  /// Same point re-expressed in `target` (variables matched by name).
  QuadricPoint embed(const RingPtr& target) const;

  friend bool operator==(const QuadricPoint& a, const QuadricPoint& b) {
    return a.f == b.f && a.g == b.g && a.s == b.s;
  }
};

/// (u; v; t) with sum u_i v_i + t^2 - 1 = 0, the sphere model q_{2n+1} = 1.
struct SpherePoint {
  SpherePoint(RingPtr ring, std::vector<Polynomial> u, std::vector<Polynomial> v, Polynomial t);

  RingPtr ring;
  std::vector<Polynomial> u;
  std::vector<Polynomial> v;
  Polynomial t;

  std::size_t n() const noexcept { return u.size(); }
  Polynomial residual() const;
  std::vector<Polynomial> coordinates() const;

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.u == b.u && a.v == b.v && a.t == b.t;
  }
};

/// (f_1..f_n, s) after dropping g; keeps the dropped g as an optional witness.
struct ForgetPoint {
  RingPtr ring;
  std::vector<Polynomial> f;
  Polynomial s;
  std::optional<std::vector<Polynomial>> witness;
};

struct Violation {
  std::string what;
  Polynomial residual;
};

std::optional<Violation> validate_point(const QuadricPoint& v);
std::optional<Violation> validate_point(const SpherePoint& w);

/// (f, g, s) -> (2f, 2g, 2s - 1). Throws DomainError in characteristic 2.
SpherePoint to_sphere(const QuadricPoint& v);
/// (u, v, t) -> (u/2, v/2, (t + 1)/2). Throws DomainError in characteristic 2.
QuadricPoint from_sphere(const SpherePoint& w);

/// (f_1, ..., f_n, s) in that order.
IdealPresentation ideal_of(const QuadricPoint& v);

/// sum_{i<n} w_i w_{n+i} + w_{2n}^2 for a vector of odd length 2n+1.
Polynomial q_eval(const std::vector<Polynomial>& w);

/// Gram matrix of the bilinear form of q_{2n+1}:
/// 1/2 * [[0, I_n, 0], [I_n, 0, 0], [0, 0, 2]].
struct FormMatrix {
  std::size_t n;
  std::vector<std::vector<Coef>> entries;
};
FormMatrix bilinear_matrix(std::size_t n, const CoefField& field);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix identity_matrix(const RingPtr& ring, std::size_t size);
PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b);
/// w * B * w^T for a row vector w.
Polynomial form_value(const std::vector<Polynomial>& w, const FormMatrix& b);

/// Points act on the right as row vectors, so q is preserved exactly when
/// M B M^T = B.
bool is_orthogonal(const PolyMatrix& m, const RingPtr& ring);

/// from_sphere(to_sphere(v) * M). Throws InputError unless M is orthogonal.
QuadricPoint act(const QuadricPoint& v, const PolyMatrix& m);

}  // namespace ciobs
