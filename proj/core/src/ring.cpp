#include "ciobs/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ciobs/error.hpp"

namespace ciobs {

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Exponents e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Exponents e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

RingPtr PolyRing::make(CoefField field, std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) {
      throw InputError("bad variable name '" + v + "'");
    }
    for (char c : v) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw InputError("bad variable name '" + v + "'");
      }
    }
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
  return RingPtr(new PolyRing(std::move(field), std::move(vars)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

std::string PolyRing::fresh_name(const std::string& base) const {
  if (!has_var(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!has_var(candidate)) return candidate;
  }
}

std::string PolyRing::to_string() const {
  std::ostringstream out;
  out << field_.to_string() << "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) out << (i ? "," : "") << vars_[i];
  out << "]";
  return out.str();
}

RingPtr extend_ring(const RingPtr& ring, const std::string& name) {
  if (ring->has_var(name)) throw InputError("variable '" + name + "' already in ring");
  auto vars = ring->vars();
  vars.push_back(name);
  return PolyRing::make(ring->field(), std::move(vars));
}

RingPtr ring_without(const RingPtr& ring, const std::vector<std::string>& names) {
  std::vector<std::string> vars;
  for (const auto& v : ring->vars()) {
    if (std::find(names.begin(), names.end(), v) == names.end()) vars.push_back(v);
  }
  return PolyRing::make(ring->field(), std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.rfind("elim:", 0) == 0) {
    std::vector<std::string> block;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) block.push_back(item);
    }
    return elimination(std::move(block));
  }
  throw InputError("bad monomial order '" + text + "' (expected lex, grevlex or elim:v1,v2)");
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::elimination: {
      std::string s = "elim:";
      for (std::size_t i = 0; i < block_.size(); ++i) s += (i ? "," : "") + block_[i];
      return s;
    }
  }
  return "?";
}

BoundOrder::BoundOrder(const MonomialOrder& order, const PolyRing& ring)
    : kind_(order.kind()), in_block_(ring.nvars(), false) {
  for (const auto& name : order.block()) in_block_[ring.require_index(name)] = true;
}

int BoundOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case MonomialOrder::Kind::grevlex:
      return grevlex_compare(a, b);
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case MonomialOrder::Kind::elimination: {
      // Two grevlex passes: the eliminated block first, then the rest.
      for (bool block : {true, false}) {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (in_block_[i] == block) {
            da += a[i];
            db += b[i];
          }
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
          if (in_block_[i] == block && a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace ciobs
