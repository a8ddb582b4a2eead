#include "ciobs/monic.hpp"

#include <random>

#include "ciobs/error.hpp"
#include "ciobs/laurent.hpp"

namespace ciobs {

namespace {

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

long degree_or_zero(const Polynomial& p, const std::string& var) {
  Degree d = p.degree_in(var);
  return d.is_finite() ? static_cast<long>(d.value()) : 0;
}

// Leading coefficient of p in var when it is a nonzero constant.
std::optional<Coef> constant_lead(const Polynomial& p, const std::string& var) {
  Degree d = p.degree_in(var);
  if (!d.is_finite()) return std::nullopt;
  Polynomial c = p.coeff_in(var, d.value());
  if (c.is_zero() || !c.is_constant()) return std::nullopt;
  return c.terms().front().coef;
}

// First generator that is monic in var up to a constant, normalized.
std::optional<std::pair<std::size_t, Polynomial>> monic_generator(const IdealPresentation& ideal,
                                                                  const std::string& var) {
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (auto c = constant_lead(ideal.gens[i], var)) {
      return std::make_pair(i, ideal.gens[i].scaled(ideal.ring->field().inv(*c)));
    }
  }
  return std::nullopt;
}

VariableChange shift_change(const RingPtr& ring, const std::string& var, std::vector<Polynomial> shifts) {
  return VariableChange{ring, var, std::move(shifts)};
}

std::optional<MonicResult> try_change(const IdealPresentation& ideal, VariableChange change, MonicStrategy strategy,
                                      unsigned attempt) {
  IdealPresentation moved = change.apply(ideal);
  auto hit = monic_generator(moved, change.var);
  if (!hit) return std::nullopt;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (change.invert(moved.gens[i]) != ideal.gens[i]) {
      throw VerificationError("make_monic: change of variables does not invert", ideal.gens[i].to_string());
    }
  }
  moved.gens[hit->first] = hit->second;
  return MonicResult{std::move(moved), std::move(change), strategy, hit->first, attempt};
}

}  // namespace

std::string to_string(MonicStrategy s) {
  return s == MonicStrategy::random_linear ? "random-linear" : "power-substitution";
}

MonicStrategy parse_monic_strategy(const std::string& text) {
  if (text == "random-linear") return MonicStrategy::random_linear;
  if (text == "power-substitution") return MonicStrategy::power_substitution;
  throw InputError("unknown strategy '" + text + "' (expected random-linear or power-substitution)");
}

bool VariableChange::is_identity() const {
  for (const auto& s : shifts) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Polynomial VariableChange::apply(const Polynomial& p) const {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, ring->vars()[i]) + shifts[i]);
  return p.compose(images, ring);
}

Polynomial VariableChange::invert(const Polynomial& p) const {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, ring->vars()[i]) - shifts[i]);
  return p.compose(images, ring);
}

IdealPresentation VariableChange::apply(const IdealPresentation& ideal) const {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens) gens.push_back(apply(g));
  return IdealPresentation(ideal.ring, std::move(gens));
}

MonicResult make_monic(const IdealPresentation& ideal, const std::string& var, MonicStrategy strategy,
                       const MonicOptions& options) {
  if (ideal.all_zero()) throw InputError("make_monic: zero ideal");
  const RingPtr& ring = ideal.ring;
  const std::size_t xi = ring->require_index(var);
  if (!ring->field().is_rational()) strategy = MonicStrategy::power_substitution;

  std::vector<Polynomial> none(ring->nvars(), Polynomial(ring));
  if (auto hit = monic_generator(ideal, var)) {
    IdealPresentation out = ideal;
    out.gens[hit->first] = hit->second;
    return MonicResult{std::move(out), shift_change(ring, var, none), strategy, hit->first, 0};
  }

  Polynomial x = Polynomial::variable(ring, var);
  if (strategy == MonicStrategy::random_linear) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> pick(1, options.coefficient_bound);
    std::bernoulli_distribution sign(0.5);
    for (unsigned attempt = 1; attempt <= options.max_attempts; ++attempt) {
      auto shifts = none;
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i == xi) continue;
        long lambda = pick(rng);
        if (sign(rng)) lambda = -lambda;
        shifts[i] = x.scaled(Coef(lambda));
      }
      if (auto r = try_change(ideal, shift_change(ring, var, std::move(shifts)), strategy, attempt)) return *r;
    }
  } else {
    for (unsigned attempt = 1; attempt <= options.max_attempts; ++attempt) {
      const std::uint32_t k = attempt + 1;
      auto shifts = none;
      std::uint32_t power = 1;
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i == xi) continue;
        power *= k;
        shifts[i] = Polynomial::variable(ring, var, power);
      }
      if (auto r = try_change(ideal, shift_change(ring, var, std::move(shifts)), strategy, attempt)) return *r;
    }
  }
  throw VerificationError("make_monic: no monic generator after " + std::to_string(options.max_attempts) +
                              " attempts (" + to_string(strategy) + ")",
                          "");
}

LocalOrientation evenize(const LocalOrientation& o, const std::string& var, const Polynomial& m) {
  Degree d = m.degree_in(var);
  if (!m.is_monic_in(var)) throw InputError("evenize: witness " + m.to_string() + " is not monic in " + var);
  if (d.value() == 0) throw InputError("evenize: witness has degree 0 in " + var + "; the ideal is the unit ideal");
  certify_member(m, o.ideal, "evenize: witness in I");

  const Polynomial& f1 = o.reps[0];
  Degree d1 = f1.degree_in(var);
  if (f1.is_monic_in(var) && d1.value() % 2 == 0) return o;

  const long md = d.value();
  const long n_exp = degree_or_zero(f1, var) / (2 * md) + 1;
  Polynomial pad = m.pow(static_cast<std::uint32_t>(2 * n_exp));
  certify_member(pad, ideal_square(o.ideal), "evenize: m^2N in I^2");
  auto reps = o.reps;
  reps[0] = f1 + pad;
  return verify_orientation(o.ideal, std::move(reps));
}

std::optional<Polynomial> find_monic_member(const LocalOrientation& o, const std::string& var) {
  const RingPtr& ring = o.ring();
  Polynomial x = Polynomial::variable(ring, var);
  auto check = [&](const Polynomial& p) -> std::optional<Polynomial> {
    auto c = constant_lead(p, var);
    if (!c) return std::nullopt;
    if (p.degree_in(var).value() == 0) return x;  // a unit lies in I
    return p.scaled(ring->field().inv(*c));
  };
  for (const auto* list : {&o.ideal.gens, &o.reps}) {
    for (const auto& p : *list) {
      if (auto m = check(p)) return m;
    }
  }
  std::vector<std::string> others;
  for (const auto& v : ring->vars()) {
    if (v != var) others.push_back(v);
  }
  for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(others)}) {
    auto gb = groebner(o.ideal, order);
    for (const auto& p : gb.basis) {
      if (auto m = check(p)) return m;
    }
  }
  return std::nullopt;
}

namespace {

struct Substitution {
  RingPtr ring;  // A[X, T]
  std::string param;
  LaurentElement image;  // X - T + 1/T
};

Substitution make_substitution(const RingPtr& base, const std::string& var) {
  std::string param = homotopy_parameter(base);
  RingPtr r = homotopy_ring(base, param);
  LaurentElement image = LaurentElement(Polynomial::variable(r, var) - Polynomial::variable(r, param), param) +
                         LaurentElement::param_power(r, param, -1);
  return Substitution{r, param, image};
}

std::vector<long> clearing_exponents(const std::vector<Polynomial>& reps, const std::string& var, DeltaRule rule) {
  std::vector<long> deltas{degree_or_zero(reps[0], var)};
  long widest = 0;
  for (std::size_t i = 1; i < reps.size(); ++i) widest = std::max(widest, degree_or_zero(reps[i], var) + 1);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    if (reps[i].is_zero()) {
      deltas.push_back(0);
    } else {
      deltas.push_back(rule == DeltaRule::uniform ? widest : degree_or_zero(reps[i], var) + 1);
    }
  }
  return deltas;
}

std::vector<Polynomial> images_of_reps(const Substitution& sub, const std::vector<Polynomial>& reps,
                                       const std::string& var, const std::vector<long>& deltas) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    out.push_back(clear_laurent(substitute(reps[i], var, sub.image), deltas[i]));
  }
  return out;
}

IdealPresentation contract(const Substitution& sub, const LocalOrientation& ev, const std::vector<Polynomial>& big_f,
                           const std::string& var) {
  std::vector<Polynomial> gens;
  for (const auto& p : big_f) {
    if (!p.is_zero()) gens.push_back(p);
  }
  for (const auto& hh : ideal_square(ev.ideal).gens) {
    gens.push_back(clear_laurent(substitute(hh, var, sub.image), degree_or_zero(hh, var)));
  }
  if (gens.empty()) gens.push_back(Polynomial(sub.ring));
  return saturate(IdealPresentation(sub.ring, std::move(gens)), Polynomial::variable(sub.ring, sub.param));
}

bool is_unit_orientation(const LocalOrientation& o) {
  if (!o.reps[0].is_one()) return false;
  for (std::size_t i = 1; i < o.n(); ++i) {
    if (!o.reps[i].is_zero()) return false;
  }
  return true;
}

}  // namespace

IdealPresentation contracted_ideal(const LocalOrientation& ev, const std::string& var, DeltaRule rule) {
  auto sub = make_substitution(ev.ring(), var);
  auto big_f = images_of_reps(sub, ev.reps, var, clearing_exponents(ev.reps, var, rule));
  return contract(sub, ev, big_f, var);
}

MonicTrivialization trivialize_monic(const LocalOrientation& o, const std::string& var,
                                     const TrivializeOptions& options) {
  const RingPtr& ring = o.ring();
  if (ring->field().characteristic() == 2) throw DomainError("trivialize: characteristic 2 is not supported");
  ring->require_index(var);
  auto sub = make_substitution(ring, var);
  const std::size_t n = o.n();

  if (is_unit_orientation(o)) {
    QuadricPoint v = to_point(o);
    return MonicTrivialization{o,
                               var,
                               Polynomial::variable(ring, var),
                               o,
                               o.reps[0],
                               std::vector<long>(n, 0),
                               constant_homotopy(v, sub.param),
                               IdealPresentation(sub.ring, {one(sub.ring)}),
                               unit_collapse(v)};
  }

  Polynomial m(ring);
  if (options.witness) {
    m = *options.witness;
  } else if (auto found = find_monic_member(o, var)) {
    m = *found;
  } else {
    throw VerificationError("trivialize: no member of I is monic in " + var + "; apply make_monic first", "");
  }

  LocalOrientation ev = evenize(o, var, m);
  auto deltas = clearing_exponents(ev.reps, var, options.delta);
  auto big_f = images_of_reps(sub, ev.reps, var, deltas);

  if (!big_f[0].eval_at(sub.param, Coef(0)).is_one()) {
    throw VerificationError("trivialize: F_1(X, 0) is not 1", big_f[0].eval_at(sub.param, Coef(0)).to_string());
  }
  for (std::size_t i = 1; i < n; ++i) {
    Polynomial at0 = big_f[i].eval_at(sub.param, Coef(0));
    if (!at0.is_zero()) {
      throw VerificationError("trivialize: F_" + std::to_string(i + 1) + "(X, 0) is not 0", at0.to_string());
    }
  }

  IdealPresentation big_i = contract(sub, ev, big_f, var);
  Polynomial t = Polynomial::variable(sub.ring, sub.param);
  certify_member(one(sub.ring), ideal_sum(big_i, IdealPresentation(sub.ring, {t})), "trivialize: 1 in I + (T)");

  auto lifted = verify_orientation(big_i, big_f);
  HomotopyPoint psi(to_point(lifted), sub.param);
  if (auto bad = validate_homotopy(psi)) throw VerificationError("trivialize: psi " + bad->what, bad->residual.to_string());

  QuadricPoint top = endpoint(psi, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (top.f[i] != ev.reps[i]) {
      throw VerificationError("trivialize: psi(X, 1) differs from the reps at f" + std::to_string(i + 1),
                              top.f[i].to_string());
    }
  }
  std::vector<Polynomial> at_one;
  for (const auto& g : big_i.gens) at_one.push_back(g.eval_at(sub.param, Coef(1)));
  if (!ideal_equal(IdealPresentation(ring, std::move(at_one)), o.ideal)) {
    throw VerificationError("trivialize: contracted ideal at T = 1 differs from I", "");
  }

  QuadricPoint start = to_point(o);
  HomotopyChain chain = chain_of(reverse(psi));
  if (start != top) chain = chain_concat(connect_same_orientation(start, top), chain);
  chain = chain_concat(chain, unit_collapse(endpoint(psi, 0)));
  auto [from, to] = chain_validate(chain);
  if (from != start || !to.is_zero()) throw VerificationError("trivialize: chain endpoints are wrong", "");

  Polynomial f1 = ev.reps[0];
  return MonicTrivialization{o, var, m, std::move(ev), std::move(f1), std::move(deltas), std::move(psi),
                             std::move(big_i), std::move(chain)};
}

}  // namespace ciobs
