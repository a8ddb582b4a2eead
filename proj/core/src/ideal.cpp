#include <algorithm>

#include "ciobs/error.hpp"
#include "ciobs/ideal.hpp"

namespace ciobs {

IdealPresentation::IdealPresentation(RingPtr r, std::vector<Polynomial> g)
    : ring(std::move(r)), gens(std::move(g)) {
  for (const auto& p : gens) {
    if (!same_ring(p.ring(), ring)) throw InputError("ideal generators must share the ideal's ring");
  }
}

IdealPresentation IdealPresentation::parse(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) polys.push_back(Polynomial::parse(g, ring));
  return IdealPresentation(ring, std::move(polys));
}

bool IdealPresentation::all_zero() const {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<std::string> IdealPresentation::to_strings() const {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

Polynomial MembershipCertificate::residual(const IdealPresentation& ideal) const {
  if (coefficients.size() != ideal.gens.size()) {
    throw InputError("certificate has " + std::to_string(coefficients.size()) + " coefficients for " +
                     std::to_string(ideal.gens.size()) + " generators");
  }
  return target - sum_of_products(coefficients, ideal.gens, ideal.ring);
}

namespace {

void require_same(const IdealPresentation& a, const IdealPresentation& b) {
  if (!same_ring(a.ring, b.ring)) {
    throw InputError("ring mismatch: " + a.ring->to_string() + " vs " + b.ring->to_string());
  }
}

void push_unique(std::vector<Polynomial>& out, Polynomial p) {
  if (p.is_zero()) return;
  if (std::find(out.begin(), out.end(), p) != out.end()) return;
  out.push_back(std::move(p));
}

IdealPresentation zero_ideal(const RingPtr& ring) { return IdealPresentation(ring, {Polynomial(ring)}); }

IdealPresentation from_basis(const ReducedGroebnerBasis& gb) {
  if (gb.basis.empty()) return zero_ideal(gb.ring);
  return IdealPresentation(gb.ring, gb.basis);
}

}  // namespace

IdealPresentation ideal_sum(const IdealPresentation& a, const IdealPresentation& b) {
  require_same(a, b);
  auto gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return IdealPresentation(a.ring, std::move(gens));
}

IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b) {
  require_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& p : a.gens) {
    for (const auto& q : b.gens) push_unique(gens, p * q);
  }
  if (gens.empty()) return zero_ideal(a.ring);
  return IdealPresentation(a.ring, std::move(gens));
}

IdealPresentation ideal_square(const IdealPresentation& a) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < a.gens.size(); ++i) {
    for (std::size_t j = i; j < a.gens.size(); ++j) push_unique(gens, a.gens[i] * a.gens[j]);
  }
  if (gens.empty()) return zero_ideal(a.ring);
  return IdealPresentation(a.ring, std::move(gens));
}

IdealPresentation eliminate(const IdealPresentation& a, const std::vector<std::string>& vars) {
  RingPtr sub = ring_without(a.ring, vars);
  if (vars.empty()) {
    return from_basis(groebner(a));
  }
  for (const auto& v : vars) a.ring->require_index(v);
  auto gb = groebner(a, MonomialOrder::elimination(vars));
  std::vector<Polynomial> kept;
  for (const auto& b : gb.basis) {
    bool free = std::none_of(vars.begin(), vars.end(), [&](const std::string& v) { return b.involves(v); });
    if (free) kept.push_back(b.embed(sub));
  }
  if (kept.empty()) return zero_ideal(sub);
  // The surviving elements are already a grevlex-compatible generating set;
  // re-reduce so the output is canonical.
  return from_basis(groebner(IdealPresentation(sub, std::move(kept))));
}

IdealPresentation ideal_intersection(const IdealPresentation& a, const IdealPresentation& b) {
  require_same(a, b);
  if (a.all_zero() || b.all_zero()) return zero_ideal(a.ring);
  const std::string t = a.ring->fresh_name("t");
  RingPtr big = extend_ring(a.ring, t);
  Polynomial tp = Polynomial::variable(big, t);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - tp;
  std::vector<Polynomial> gens;
  for (const auto& p : a.gens) {
    if (!p.is_zero()) gens.push_back(tp * p.embed(big));
  }
  for (const auto& q : b.gens) {
    if (!q.is_zero()) gens.push_back(one_minus_t * q.embed(big));
  }
  auto out = eliminate(IdealPresentation(big, std::move(gens)), {t});
  return IdealPresentation(a.ring, [&] {
    std::vector<Polynomial> v;
    for (const auto& g : out.gens) v.push_back(g.embed(a.ring));
    return v;
  }());
}

IdealPresentation ideal_quotient(const IdealPresentation& a, const IdealPresentation& b) {
  require_same(a, b);
  if (b.all_zero()) throw InputError("ideal_quotient: divisor ideal is zero");
  auto gb_a = groebner(a);
  std::optional<IdealPresentation> acc;
  for (const auto& j : b.gens) {
    if (j.is_zero()) continue;
    // (a : j) is everything when j already lies in a.
    if (membership(j, gb_a)) continue;
    auto meet = ideal_intersection(a, IdealPresentation(a.ring, {j}));
    std::vector<Polynomial> quotients;
    for (const auto& g : meet.gens) {
      auto q = divide_exact(g, j);
      if (!q) throw VerificationError("ideal_quotient: intersection element not divisible", g.to_string());
      push_unique(quotients, std::move(*q));
    }
    IdealPresentation part = quotients.empty() ? zero_ideal(a.ring) : IdealPresentation(a.ring, quotients);
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  if (!acc) return IdealPresentation(a.ring, {Polynomial::constant(a.ring, 1)});
  return from_basis(groebner(*acc));
}

IdealPresentation saturate(const IdealPresentation& a, const Polynomial& f) {
  if (f.is_zero()) throw InputError("saturate: f must be nonzero");
  if (!same_ring(f.ring(), a.ring)) throw InputError("saturate: ring mismatch");
  const std::string w = a.ring->fresh_name("w");
  RingPtr big = extend_ring(a.ring, w);
  std::vector<Polynomial> gens;
  for (const auto& p : a.gens) gens.push_back(p.embed(big));
  gens.push_back(Polynomial::variable(big, w) * f.embed(big) - Polynomial::constant(big, 1));
  auto out = eliminate(IdealPresentation(big, std::move(gens)), {w});
  std::vector<Polynomial> back;
  for (const auto& g : out.gens) back.push_back(g.embed(a.ring));
  return IdealPresentation(a.ring, std::move(back));
}

IdealPresentation kernel_of_map(const RingPtr& source, const RingPtr& target,
                                const std::vector<Polynomial>& images) {
  if (images.size() != source->nvars()) {
    throw InputError("kernel_of_map: expected " + std::to_string(source->nvars()) + " images, got " +
                     std::to_string(images.size()));
  }
  if (!(source->field() == target->field())) throw InputError("kernel_of_map: field mismatch");
  for (const auto& im : images) {
    if (!same_ring(im.ring(), target)) throw InputError("kernel_of_map: image outside target ring");
  }
  // Joint ring: source variables followed by (renamed if needed) target ones.
  std::vector<std::string> vars = source->vars();
  std::vector<std::string> renamed;
  for (const auto& v : target->vars()) {
    std::string name = v;
    while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
    vars.push_back(name);
    renamed.push_back(name);
  }
  RingPtr joint = PolyRing::make(source->field(), vars);
  std::vector<Polynomial> target_vars;
  for (const auto& name : renamed) target_vars.push_back(Polynomial::variable(joint, name));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    gens.push_back(Polynomial::variable(joint, source->vars()[i]) - images[i].compose(target_vars, joint));
  }
  auto out = eliminate(IdealPresentation(joint, std::move(gens)), renamed);
  std::vector<Polynomial> back;
  for (const auto& g : out.gens) back.push_back(g.embed(source));
  return IdealPresentation(source, std::move(back));
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
  require_same(a, b);
  auto ga = groebner(a);
  auto gb = groebner(b);
  return ga.basis == gb.basis;
}

bool ideal_contains(const IdealPresentation& outer, const IdealPresentation& inner) {
  require_same(outer, inner);
  auto gb = groebner(outer);
  return std::all_of(inner.gens.begin(), inner.gens.end(),
                     [&](const Polynomial& p) { return static_cast<bool>(membership(p, gb)); });
}

}  // namespace ciobs
