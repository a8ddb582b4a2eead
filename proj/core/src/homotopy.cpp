#include "ciobs/homotopy.hpp"

#include "ciobs/error.hpp"
#include "ciobs/orientation.hpp"

namespace ciobs {

namespace {

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

std::vector<Polynomial> zeros(const RingPtr& ring, std::size_t n) {
  return std::vector<Polynomial>(n, Polynomial(ring));
}

std::vector<Polynomial> embed_all(const std::vector<Polynomial>& ps, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.embed(target));
  return out;
}

std::vector<Polynomial> eval_all(const std::vector<Polynomial>& ps, const std::string& var, long t) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.eval_at(var, Coef(t)));
  return out;
}

std::vector<Polynomial> subst_all(const std::vector<Polynomial>& ps, const std::string& var,
                                  const Polynomial& value) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.substitute(var, value));
  return out;
}

void require_valid(const QuadricPoint& v, const std::string& who) {
  if (auto bad = validate_point(v)) {
    throw VerificationError(who + ": input point is not on the quadric", bad->residual.to_string());
  }
}

std::string coordinate_name(std::size_t index, std::size_t n) {
  if (index < n) return "f" + std::to_string(index + 1);
  if (index < 2 * n) return "g" + std::to_string(index - n + 1);
  return "s";
}

}  // namespace

HomotopyPoint::HomotopyPoint(QuadricPoint p, std::string name) : point(std::move(p)), param(std::move(name)) {
  if (!point.ring->has_var(param)) {
    throw InputError("homotopy parameter '" + param + "' is not a variable of " + point.ring->to_string());
  }
}

RingPtr HomotopyPoint::base_ring() const { return ring_without(point.ring, {param}); }

std::string homotopy_parameter(const RingPtr& base) { return base->fresh_name("T"); }

RingPtr homotopy_ring(const RingPtr& base, const std::string& param) { return extend_ring(base, param); }

std::optional<Violation> validate_homotopy(const HomotopyPoint& h) { return validate_point(h.point); }

QuadricPoint endpoint(const HomotopyPoint& h, int t) {
  if (t != 0 && t != 1) throw InputError("endpoint: t must be 0 or 1");
  return QuadricPoint(h.base_ring(), eval_all(h.point.f, h.param, t), eval_all(h.point.g, h.param, t),
                      h.point.s.eval_at(h.param, Coef(t)));
}

HomotopyPoint reverse(const HomotopyPoint& h) {
  const RingPtr& r = h.ring();
  Polynomial flip = one(r) - Polynomial::variable(r, h.param);
  return HomotopyPoint(QuadricPoint(r, subst_all(h.point.f, h.param, flip), subst_all(h.point.g, h.param, flip),
                                    h.point.s.substitute(h.param, flip)),
                       h.param);
}

HomotopyPoint constant_homotopy(const QuadricPoint& v, const std::string& param) {
  return HomotopyPoint(v.embed(homotopy_ring(v.ring, param)), param);
}

std::optional<std::pair<std::size_t, std::string>> first_difference(const QuadricPoint& a,
                                                                    const QuadricPoint& b) {
  if (a.n() != b.n()) return std::make_pair(std::size_t{0}, std::string("n"));
  auto ca = a.coordinates();
  auto cb = b.coordinates();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!same_ring(ca[i].ring(), cb[i].ring()) || ca[i] != cb[i]) {
      return std::make_pair(i, coordinate_name(i, a.n()));
    }
  }
  return std::nullopt;
}

namespace {

void require_same_point(const QuadricPoint& expected, const QuadricPoint& actual, const std::string& where) {
  if (auto d = first_difference(expected, actual)) {
    std::string detail;
    if (d->second != "n") {
      detail = expected.coordinates()[d->first].to_string() + " vs " + actual.coordinates()[d->first].to_string();
    }
    throw VerificationError(where + ": coordinate " + d->second + " differs", detail);
  }
}

}  // namespace

HomotopyChain chain_of(const HomotopyPoint& h) {
  return HomotopyChain{h.base_ring(), h.param, endpoint(h, 0), endpoint(h, 1), {h}};
}

std::pair<QuadricPoint, QuadricPoint> chain_validate(const HomotopyChain& c) {
  if (c.steps.empty()) throw VerificationError("chain has no steps", "");
  RingPtr expected_ring = homotopy_ring(c.base, c.param);
  if (!same_ring(c.start.ring, c.base) || !same_ring(c.end.ring, c.base)) {
    throw VerificationError("chain endpoints are not over the chain's base ring", "");
  }
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const auto& h = c.steps[k];
    std::string where = "step " + std::to_string(k + 1);
    if (h.param != c.param || !same_ring(h.ring(), expected_ring)) {
      throw VerificationError(where + ": not over " + expected_ring->to_string(), "");
    }
    if (auto bad = validate_homotopy(h)) throw VerificationError(where + ": " + bad->what, bad->residual.to_string());
    if (k == 0) require_same_point(c.start, endpoint(h, 0), where + " start");
    if (k + 1 < c.steps.size()) {
      require_same_point(endpoint(h, 1), endpoint(c.steps[k + 1], 0), where + " end");
    } else {
      require_same_point(c.end, endpoint(h, 1), where + " end");
    }
  }
  return {c.start, c.end};
}

HomotopyChain chain_concat(const HomotopyChain& a, const HomotopyChain& b) {
  if (a.param != b.param || !same_ring(a.base, b.base)) {
    throw VerificationError("chain_concat: chains live over different rings", "");
  }
  require_same_point(a.end, b.start, "chain_concat");
  HomotopyChain out = a;
  out.end = b.end;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

HomotopyChain chain_reverse(const HomotopyChain& c) {
  HomotopyChain out{c.base, c.param, c.end, c.start, {}};
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) out.steps.push_back(reverse(*it));
  return out;
}

HomotopyPoint move_cofactor(const QuadricPoint& v, const std::vector<Polynomial>& g_new) {
  if (g_new.size() != v.n()) throw InputError("move_cofactor: g' has the wrong length");
  std::vector<Polynomial> diff;
  for (std::size_t i = 0; i < v.n(); ++i) diff.push_back(v.g[i] - g_new[i]);
  Polynomial syzygy = sum_of_products(v.f, diff, v.ring);
  if (!syzygy.is_zero()) throw VerificationError("move_cofactor: sum f_i (g_i - g'_i) is not zero", syzygy.to_string());

  std::string param = homotopy_parameter(v.ring);
  RingPtr r = homotopy_ring(v.ring, param);
  Polynomial t = Polynomial::variable(r, param);
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < v.n(); ++i) {
    Polynomial gi = v.g[i].embed(r);
    g.push_back(gi + t * (g_new[i].embed(r) - gi));
  }
  return HomotopyPoint(QuadricPoint(r, embed_all(v.f, r), std::move(g), v.s.embed(r)), param);
}

namespace {

// Path s(T) = s + T s'(1 - s) at fixed f, with cofactors
// G(T) = (1 - T s')(g + T(1 - s) d) where sum f_i d_i = (1 - s) s'.
HomotopyPoint nakayama_path(const QuadricPoint& v, const Polynomial& s_new, const std::vector<Polynomial>& d) {
  std::string param = homotopy_parameter(v.ring);
  RingPtr r = homotopy_ring(v.ring, param);
  Polynomial t = Polynomial::variable(r, param);
  Polynomial s = v.s.embed(r);
  Polynomial sp = s_new.embed(r);
  Polynomial u = one(r) - s;
  Polynomial scale = one(r) - t * sp;
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < v.n(); ++i) g.push_back(scale * (v.g[i].embed(r) + t * u * d[i].embed(r)));
  return HomotopyPoint(QuadricPoint(r, embed_all(v.f, r), std::move(g), s + t * sp * u), param);
}

}  // namespace

HomotopyChain move_nakayama(const QuadricPoint& v, const Polynomial& s_new, const std::vector<Polynomial>& g_new) {
  require_valid(v, "move_nakayama");
  QuadricPoint w(v.ring, v.f, g_new, s_new);
  require_valid(w, "move_nakayama");
  std::string param = homotopy_parameter(v.ring);
  if (v == w) return chain_of(constant_homotopy(v, param));
  if (v.s == s_new) return chain_of(move_cofactor(v, g_new));

  IdealPresentation f_ideal(v.ring, v.f);
  auto gb_f = groebner(f_ideal);
  certify_member(s_new, ideal_of(v), "move_nakayama: s' in I(v)");
  auto d = certify_member((one(v.ring) - v.s) * s_new, gb_f, "move_nakayama: (1 - s) s' in (f)");
  auto d_new = certify_member((one(v.ring) - s_new) * v.s, gb_f, "move_nakayama: (1 - s') s in (f)");

  HomotopyPoint h1 = nakayama_path(v, s_new, d.coefficients);
  HomotopyPoint h2 = nakayama_path(w, v.s, d_new.coefficients);
  HomotopyChain out = chain_of(h1);
  QuadricPoint mid1 = endpoint(h1, 1);
  QuadricPoint mid2 = endpoint(h2, 1);
  if (mid1.g != mid2.g) out = chain_concat(out, chain_of(move_cofactor(mid1, mid2.g)));
  out = chain_concat(out, chain_of(reverse(h2)));
  return out;
}

HomotopyPoint scale_f_to_zero(const QuadricPoint& v) {
  for (const auto& gi : v.g) {
    if (!gi.is_zero()) throw VerificationError("scale_f_to_zero: g is not zero", gi.to_string());
  }
  if (!v.s.is_zero()) throw VerificationError("scale_f_to_zero: s is not zero", v.s.to_string());
  std::string param = homotopy_parameter(v.ring);
  RingPtr r = homotopy_ring(v.ring, param);
  Polynomial scale = one(r) - Polynomial::variable(r, param);
  std::vector<Polynomial> f;
  for (const auto& fi : v.f) f.push_back(scale * fi.embed(r));
  return HomotopyPoint(QuadricPoint(r, std::move(f), zeros(r, v.n()), Polynomial(r)), param);
}

HomotopyChain unit_collapse(const QuadricPoint& v) {
  if (!v.f[0].is_one()) throw VerificationError("unit_collapse: f_1 is not 1", v.f[0].to_string());
  require_valid(v, "unit_collapse");
  const RingPtr& base = v.ring;

  std::vector<Polynomial> g_canon = zeros(base, v.n());
  g_canon[0] = v.s - v.s * v.s;
  HomotopyChain out = chain_of(move_cofactor(v, g_canon));

  std::string param = homotopy_parameter(base);
  RingPtr r = homotopy_ring(base, param);
  Polynomial st = (one(r) - Polynomial::variable(r, param)) * v.s.embed(r);
  std::vector<Polynomial> g = zeros(r, v.n());
  g[0] = st - st * st;
  HomotopyPoint shrink(QuadricPoint(r, embed_all(v.f, r), std::move(g), st), param);
  out = chain_concat(out, chain_of(shrink));
  out = chain_concat(out, chain_of(scale_f_to_zero(endpoint(shrink, 1))));
  return out;
}

HomotopyChain connect_same_orientation(const QuadricPoint& v, const QuadricPoint& w) {
  if (v.n() != w.n()) throw InputError("connect: points have different n");
  if (!same_ring(v.ring, w.ring)) throw InputError("connect: points live over different rings");
  require_valid(v, "connect");
  require_valid(w, "connect");
  IdealPresentation iv = ideal_of(v);
  if (!ideal_equal(iv, ideal_of(w))) throw VerificationError("connect: I(v) and I(v') differ", "");
  if (v.f == w.f) return move_nakayama(v, w.s, w.g);

  auto gb_sq = groebner(ideal_square(iv));
  for (std::size_t i = 0; i < v.n(); ++i) {
    certify_member(v.f[i] - w.f[i], gb_sq, "connect: f" + std::to_string(i + 1) + " - f'" + std::to_string(i + 1) +
                                               " in I(v)^2");
  }

  std::string param = homotopy_parameter(v.ring);
  RingPtr r = homotopy_ring(v.ring, param);
  Polynomial t = Polynomial::variable(r, param);
  std::vector<Polynomial> ft;
  for (std::size_t i = 0; i < v.n(); ++i) {
    Polynomial fi = v.f[i].embed(r);
    ft.push_back(fi + t * (w.f[i].embed(r) - fi));
  }
  auto o = verify_orientation(IdealPresentation(r, embed_all(iv.gens, r)), ft);
  HomotopyPoint mid(to_point(o), param);
  if (auto bad = validate_homotopy(mid)) throw VerificationError("connect: " + bad->what, bad->residual.to_string());

  QuadricPoint a = endpoint(mid, 0);
  QuadricPoint b = endpoint(mid, 1);
  HomotopyChain out = move_nakayama(v, a.s, a.g);
  out = chain_concat(out, chain_of(mid));
  out = chain_concat(out, move_nakayama(b, w.s, w.g));
  return out;
}

}  // namespace ciobs
