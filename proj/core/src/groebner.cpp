// Buchberger's algorithm with cofactor tracking.
//
// Working polynomials are term vectors sorted ascending in the active order,
// so the leading term is back(). Every basis element carries its expression
// in the original generators; quotients produced while reducing are collected
// per divisor and folded into the cofactors once per reduction.

#include <algorithm>
#include <map>

#include "ciobs/error.hpp"
#include "ciobs/ideal.hpp"

namespace ciobs {

namespace {

using WPoly = std::vector<Term>;

class Engine {
 public:
  Engine(RingPtr ring, const MonomialOrder& order)
      : ring_(std::move(ring)), field_(ring_->field()), order_(order, *ring_) {}

  WPoly to_work(const Polynomial& p) const {
    WPoly w(p.terms().begin(), p.terms().end());
    std::sort(w.begin(), w.end(),
              [&](const Term& a, const Term& b) { return order_.less(a.mono, b.mono); });
    return w;
  }

  Polynomial to_poly(const WPoly& w) const { return Polynomial::from_terms(ring_, w); }

  // h - c*m*b for ascending h, b.
  WPoly sub_mul(const WPoly& h, const Coef& c, const Monomial& m, const WPoly& b) const {
    WPoly out;
    out.reserve(h.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    bool have_bm = false;
    while (i < h.size() || j < b.size()) {
      if (j < b.size() && !have_bm) {
        bm = b[j].mono * m;
        have_bm = true;
      }
      int cmp;
      if (i >= h.size()) {
        cmp = 1;
      } else if (j >= b.size()) {
        cmp = -1;
      } else {
        cmp = order_.compare(h[i].mono, bm);
      }
      if (cmp < 0) {
        out.push_back(h[i++]);
      } else if (cmp > 0) {
        out.push_back({std::move(bm), field_.neg(field_.mul(c, b[j].coef))});
        have_bm = false;
        ++j;
      } else {
        Coef v = field_.sub(h[i].coef, field_.mul(c, b[j].coef));
        if (sgn(v) != 0) out.push_back({h[i].mono, std::move(v)});
        have_bm = false;
        ++i;
        ++j;
      }
    }
    return out;
  }

  struct Reduction {
    WPoly remainder;
    std::map<std::size_t, std::vector<Term>> quotients;
  };

  // Full reduction of h by the listed basis elements (skipping `skip`).
  Reduction reduce(WPoly h, const std::vector<WPoly>& basis, const std::vector<Monomial>& leads,
                   std::size_t skip = static_cast<std::size_t>(-1)) const {
    Reduction out;
    WPoly rem_desc;
    while (!h.empty()) {
      const Term& lt = h.back();
      std::size_t k = 0;
      for (; k < basis.size(); ++k) {
        if (k != skip && !basis[k].empty() && leads[k].divides(lt.mono)) break;
      }
      if (k == basis.size()) {
        rem_desc.push_back(std::move(h.back()));
        h.pop_back();
        continue;
      }
      const Coef c = field_.div(lt.coef, basis[k].back().coef);
      Monomial m = lt.mono / leads[k];
      out.quotients[k].push_back({m, c});
      h = sub_mul(h, c, m, basis[k]);
    }
    out.remainder.assign(std::make_move_iterator(rem_desc.rbegin()),
                         std::make_move_iterator(rem_desc.rend()));
    return out;
  }

  // cof - sum_k Q_k * cofs[k]
  std::vector<Polynomial> fold_cofactors(std::vector<Polynomial> cof, const Reduction& red,
                                         const std::vector<std::vector<Polynomial>>& cofs) const {
    for (const auto& [k, terms] : red.quotients) {
      Polynomial q = Polynomial::from_terms(ring_, terms);
      for (std::size_t j = 0; j < cof.size(); ++j) {
        if (!cofs[k][j].is_zero()) cof[j] -= q * cofs[k][j];
      }
    }
    return cof;
  }

  const RingPtr& ring() const { return ring_; }
  const CoefField& field() const { return field_; }
  const BoundOrder& order() const { return order_; }

 private:
  RingPtr ring_;
  const CoefField& field_;
  BoundOrder order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const Engine& engine, std::size_t ngens) : e_(engine), ngens_(ngens) {}

  // Returns true once the unit ideal has been detected.
  bool add(WPoly poly, std::vector<Polynomial> cof) {
    const Coef inv = e_.field().inv(poly.back().coef);
    for (auto& t : poly) t.coef = e_.field().mul(t.coef, inv);
    for (auto& c : cof) c = c.scaled(inv);
    const std::size_t idx = polys_.size();
    leads_.push_back(poly.back().mono);
    polys_.push_back(std::move(poly));
    cofs_.push_back(std::move(cof));
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(idx + 1, false);
    if (leads_[idx].is_one()) return true;
    for (std::size_t i = 0; i < idx; ++i) {
      pairs_.push_back({i, idx, Monomial::lcm(leads_[i], leads_[idx])});
      pending_[i][idx] = pending_[idx][i] = true;
    }
    return false;
  }

  bool insert_generator(const Polynomial& g, std::size_t column) {
    std::vector<Polynomial> cof(ngens_, Polynomial(e_.ring()));
    cof[column] = Polynomial::constant(e_.ring(), 1);
    auto red = e_.reduce(e_.to_work(g), polys_, leads_);
    if (red.remainder.empty()) return false;
    return add(std::move(red.remainder), e_.fold_cofactors(std::move(cof), red, cofs_));
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        int c = e_.order().compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
      }
      Pair p = std::move(*best);
      pairs_.erase(best);
      pending_[p.i][p.j] = pending_[p.j][p.i] = false;
      if (Monomial::coprime(leads_[p.i], leads_[p.j])) continue;
      if (chain_criterion(p)) continue;

      Monomial mi = p.lcm / leads_[p.i];
      Monomial mj = p.lcm / leads_[p.j];
      WPoly s;
      s.reserve(polys_[p.i].size());
      for (const auto& t : polys_[p.i]) s.push_back({t.mono * mi, t.coef});
      s = e_.sub_mul(s, Coef(1), mj, polys_[p.j]);
      std::vector<Polynomial> cof(ngens_, Polynomial(e_.ring()));
      for (std::size_t k = 0; k < ngens_; ++k) {
        if (!cofs_[p.i][k].is_zero()) cof[k] += cofs_[p.i][k].mul_term(mi, Coef(1));
        if (!cofs_[p.j][k].is_zero()) cof[k] -= cofs_[p.j][k].mul_term(mj, Coef(1));
      }
      auto red = e_.reduce(std::move(s), polys_, leads_);
      if (red.remainder.empty()) continue;
      if (add(std::move(red.remainder), e_.fold_cofactors(std::move(cof), red, cofs_))) return true;
    }
    return false;
  }

  // Minimalize, inter-reduce, sort by leading monomial.
  void finish(ReducedGroebnerBasis& out, bool unit) {
    std::vector<std::size_t> keep;
    if (unit) {
      keep.push_back(polys_.size() - 1);
    } else {
      for (std::size_t i = 0; i < polys_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
          if (j == i || !leads_[j].divides(leads_[i])) continue;
          redundant = !(leads_[j] == leads_[i]) || j < i;
        }
        if (!redundant) keep.push_back(i);
      }
    }
    std::vector<WPoly> polys;
    std::vector<Monomial> leads;
    std::vector<std::vector<Polynomial>> cofs;
    for (auto i : keep) {
      polys.push_back(polys_[i]);
      leads.push_back(leads_[i]);
      cofs.push_back(cofs_[i]);
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
      WPoly tail = polys[i];
      Term lead = tail.back();
      tail.pop_back();
      auto red = e_.reduce(std::move(tail), polys, leads, i);
      red.remainder.push_back(std::move(lead));
      polys[i] = std::move(red.remainder);
      cofs[i] = e_.fold_cofactors(std::move(cofs[i]), red, cofs);
    }
    std::vector<std::size_t> perm(polys.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return e_.order().less(leads[a], leads[b]); });
    for (auto i : perm) {
      out.basis.push_back(e_.to_poly(polys[i]));
      out.leads.push_back(leads[i]);
      out.cofactors.push_back(std::move(cofs[i]));
    }
  }

 private:
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!leads_[k].divides(p.lcm)) continue;
      if (!pending_[p.i][k] && !pending_[p.j][k]) return true;
    }
    return false;
  }

  const Engine& e_;
  std::size_t ngens_;
  std::vector<WPoly> polys_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<Polynomial>> cofs_;
  std::vector<std::vector<bool>> pending_;
  std::vector<Pair> pairs_;
};

}  // namespace

ReducedGroebnerBasis groebner(const IdealPresentation& ideal, const MonomialOrder& order) {
  Engine engine(ideal.ring, order);
  ReducedGroebnerBasis out{ideal.ring, order, ideal.gens, {}, {}, {}};
  Buchberger bb(engine, ideal.gens.size());
  bool unit = false;
  for (std::size_t j = 0; j < ideal.gens.size() && !unit; ++j) {
    const Polynomial& g = ideal.gens[j];
    if (g.is_zero()) continue;
    bool duplicate = false;
    for (std::size_t i = 0; i < j && !duplicate; ++i) duplicate = ideal.gens[i] == g;
    if (duplicate) continue;
    unit = bb.insert_generator(g, j);
  }
  if (!unit) unit = bb.run();
  bb.finish(out, unit);
  return out;
}

bool ReducedGroebnerBasis::cofactor_identity_holds() const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sum_of_products(cofactors[i], generators, ring) != basis[i]) return false;
  }
  return true;
}

NormalForm normal_form(const Polynomial& p, const ReducedGroebnerBasis& gb) {
  require_same_ring(p, Polynomial(gb.ring));
  Engine engine(gb.ring, gb.order);
  std::vector<WPoly> polys;
  polys.reserve(gb.basis.size());
  for (const auto& b : gb.basis) polys.push_back(engine.to_work(b));
  auto red = engine.reduce(engine.to_work(p), polys, gb.leads);
  NormalForm out{engine.to_poly(red.remainder),
                 std::vector<Polynomial>(gb.basis.size(), Polynomial(gb.ring))};
  for (auto& [k, terms] : red.quotients) out.quotients[k] = Polynomial::from_terms(gb.ring, terms);
  return out;
}

MembershipResult membership(const Polynomial& p, const ReducedGroebnerBasis& gb) {
  NormalForm nf = normal_form(p, gb);
  if (!nf.remainder.is_zero()) return {std::nullopt, std::move(nf.remainder)};
  std::vector<Polynomial> coeffs(gb.generators.size(), Polynomial(gb.ring));
  for (std::size_t i = 0; i < nf.quotients.size(); ++i) {
    if (nf.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (!gb.cofactors[i][j].is_zero()) coeffs[j] += nf.quotients[i] * gb.cofactors[i][j];
    }
  }
  return {MembershipCertificate{p, std::move(coeffs)}, Polynomial(gb.ring)};
}

MembershipResult membership(const Polynomial& p, const IdealPresentation& ideal) {
  return membership(p, groebner(ideal));
}

MembershipCertificate certify_member(const Polynomial& p, const ReducedGroebnerBasis& gb,
                                     const std::string& what) {
  auto r = membership(p, gb);
  if (!r) throw VerificationError(what + " fails (not a member)", r.remainder.to_string());
  return std::move(*r.certificate);
}

MembershipCertificate certify_member(const Polynomial& p, const IdealPresentation& ideal,
                                     const std::string& what) {
  return certify_member(p, groebner(ideal), what);
}

}  // namespace ciobs
