#include "ciobs/quadric.hpp"

#include "ciobs/error.hpp"

namespace ciobs {

namespace {

void check_ring(const RingPtr& ring, const std::vector<Polynomial>& ps, const char* what) {
  for (const auto& p : ps) {
    if (!same_ring(p.ring(), ring)) throw InputError(std::string(what) + ": coordinate outside the point's ring");
  }
}

void require_odd_characteristic(const CoefField& field, const char* what) {
  if (field.characteristic() == 2) throw DomainError(std::string(what) + " needs 1/2 (characteristic 2 given)");
}

}  // namespace

QuadricPoint::QuadricPoint(RingPtr r, std::vector<Polynomial> f_, std::vector<Polynomial> g_, Polynomial s_)
    : ring(std::move(r)), f(std::move(f_)), g(std::move(g_)), s(std::move(s_)) {
  if (f.empty()) throw InputError("quadric point needs n >= 1");
  if (f.size() != g.size()) throw InputError("quadric point: f and g lengths differ");
  check_ring(ring, f, "quadric point");
  check_ring(ring, g, "quadric point");
  check_ring(ring, {s}, "quadric point");
}

QuadricPoint QuadricPoint::zero(const RingPtr& ring, std::size_t n) {
  return QuadricPoint(ring, std::vector<Polynomial>(n, Polynomial(ring)),
                      std::vector<Polynomial>(n, Polynomial(ring)), Polynomial(ring));
}

Polynomial QuadricPoint::residual() const {
  return sum_of_products(f, g, ring) + s * (s - Polynomial::constant(ring, 1));
}

bool QuadricPoint::is_zero() const {
  for (std::size_t i = 0; i < n(); ++i) {
    if (!f[i].is_zero() || !g[i].is_zero()) return false;
  }
  return s.is_zero();
}

std::vector<Polynomial> QuadricPoint::coordinates() const {
  std::vector<Polynomial> out = f;
  out.insert(out.end(), g.begin(), g.end());
  out.push_back(s);
  return out;
}

QuadricPoint QuadricPoint::embed(const RingPtr& target) const {
  auto move = [&](const std::vector<Polynomial>& ps) {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.embed(target));
    return out;
  };
  return QuadricPoint(target, move(f), move(g), s.embed(target));
}

SpherePoint::SpherePoint(RingPtr r, std::vector<Polynomial> u_, std::vector<Polynomial> v_, Polynomial t_)
    : ring(std::move(r)), u(std::move(u_)), v(std::move(v_)), t(std::move(t_)) {
  if (u.empty()) throw InputError("sphere point needs n >= 1");
  if (u.size() != v.size()) throw InputError("sphere point: u and v lengths differ");
  check_ring(ring, u, "sphere point");
  check_ring(ring, v, "sphere point");
  check_ring(ring, {t}, "sphere point");
}

Polynomial SpherePoint::residual() const {
  return sum_of_products(u, v, ring) + t * t - Polynomial::constant(ring, 1);
}

std::vector<Polynomial> SpherePoint::coordinates() const {
  std::vector<Polynomial> out = u;
  out.insert(out.end(), v.begin(), v.end());
  out.push_back(t);
  return out;
}

std::optional<Violation> validate_point(const QuadricPoint& v) {
  Polynomial r = v.residual();
  if (r.is_zero()) return std::nullopt;
  return Violation{"sum f_i g_i + s(s-1) != 0", std::move(r)};
}

std::optional<Violation> validate_point(const SpherePoint& w) {
  Polynomial r = w.residual();
  if (r.is_zero()) return std::nullopt;
  return Violation{"sum u_i v_i + t^2 - 1 != 0", std::move(r)};
}

SpherePoint to_sphere(const QuadricPoint& v) {
  require_odd_characteristic(v.ring->field(), "to_sphere");
  const Coef two(2);
  std::vector<Polynomial> u, w;
  for (const auto& p : v.f) u.push_back(p.scaled(two));
  for (const auto& p : v.g) w.push_back(p.scaled(two));
  return SpherePoint(v.ring, std::move(u), std::move(w), v.s.scaled(two) - Polynomial::constant(v.ring, 1));
}

QuadricPoint from_sphere(const SpherePoint& w) {
  require_odd_characteristic(w.ring->field(), "from_sphere");
  const Coef half(1, 2);
  std::vector<Polynomial> f, g;
  for (const auto& p : w.u) f.push_back(p.scaled(half));
  for (const auto& p : w.v) g.push_back(p.scaled(half));
  return QuadricPoint(w.ring, std::move(f), std::move(g), (w.t + Polynomial::constant(w.ring, 1)).scaled(half));
}

IdealPresentation ideal_of(const QuadricPoint& v) {
  std::vector<Polynomial> gens = v.f;
  gens.push_back(v.s);
  return IdealPresentation(v.ring, std::move(gens));
}

Polynomial q_eval(const std::vector<Polynomial>& w) {
  if (w.empty() || w.size() % 2 == 0) {
    throw InputError("q_eval: expected a vector of odd length 2n+1, got " + std::to_string(w.size()));
  }
  const std::size_t n = w.size() / 2;
  Polynomial acc = w[2 * n] * w[2 * n];
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * w[n + i];
  return acc;
}

FormMatrix bilinear_matrix(std::size_t n, const CoefField& field) {
  require_odd_characteristic(field, "bilinear_matrix");
  const std::size_t dim = 2 * n + 1;
  FormMatrix b{n, std::vector<std::vector<Coef>>(dim, std::vector<Coef>(dim, Coef(0)))};
  const Coef half = field.from_rational(Coef(1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    b.entries[i][n + i] = half;
    b.entries[n + i][i] = half;
  }
  b.entries[2 * n][2 * n] = field.from_int(1);
  return b;
}

PolyMatrix identity_matrix(const RingPtr& ring, std::size_t size) {
  PolyMatrix m(size, std::vector<Polynomial>(size, Polynomial(ring)));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw InputError("matrix_product: dimension mismatch");
  const RingPtr& ring = a[0][0].ring();
  PolyMatrix out(a.size(), std::vector<Polynomial>(b[0].size(), Polynomial(ring)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Polynomial form_value(const std::vector<Polynomial>& w, const FormMatrix& b) {
  const std::size_t dim = b.entries.size();
  if (w.size() != dim) throw InputError("form_value: dimension mismatch");
  Polynomial acc(w[0].ring());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(b.entries[i][j]) != 0) acc += (w[i] * w[j]).scaled(b.entries[i][j]);
    }
  }
  return acc;
}

bool is_orthogonal(const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t dim = m.size();
  if (dim == 0 || dim % 2 == 0) throw InputError("is_orthogonal: matrix size must be 2n+1");
  for (const auto& row : m) {
    if (row.size() != dim) throw InputError("is_orthogonal: matrix is not square");
    check_ring(ring, row, "is_orthogonal");
  }
  FormMatrix b = bilinear_matrix(dim / 2, ring->field());
  PolyMatrix bm(dim, std::vector<Polynomial>(dim, Polynomial(ring)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) bm[i][j] = Polynomial::constant(ring, b.entries[i][j]);
  }
  PolyMatrix mt(dim, std::vector<Polynomial>(dim, Polynomial(ring)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) mt[i][j] = m[j][i];
  }
  return matrix_product(matrix_product(m, bm), mt) == bm;
}

QuadricPoint act(const QuadricPoint& v, const PolyMatrix& m) {
  if (m.size() != 2 * v.n() + 1) throw InputError("act: matrix size does not match 2n+1");
  if (!is_orthogonal(m, v.ring)) throw InputError("act: matrix is not orthogonal for q_{2n+1}");
  std::vector<Polynomial> row = to_sphere(v).coordinates();
  PolyMatrix w = matrix_product(PolyMatrix{row}, m);
  const std::size_t n = v.n();
  std::vector<Polynomial> u(w[0].begin(), w[0].begin() + static_cast<long>(n));
  std::vector<Polynomial> vv(w[0].begin() + static_cast<long>(n), w[0].begin() + static_cast<long>(2 * n));
  return from_sphere(SpherePoint(v.ring, std::move(u), std::move(vv), w[0][2 * n]));
}

}  // namespace ciobs
