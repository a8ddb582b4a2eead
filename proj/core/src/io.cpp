#include "ciobs/io.hpp"

#include <fstream>
#include <sstream>

#include "ciobs/error.hpp"

namespace ciobs::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json ring_to_json(const RingPtr& ring) {
  return Json{{"field", ring->field().to_string()}, {"vars", ring->vars()}};
}

RingPtr ring_from_json(const Json& j) {
  const Json& vars = field(j, "vars", "ring");
  if (!vars.is_array()) throw InputError("ring: \"vars\" must be a list of names");
  std::vector<std::string> names;
  for (const auto& v : vars) names.push_back(string_at(v, "ring.vars"));
  CoefField f = j.contains("field") ? CoefField::parse(string_at(j.at("field"), "ring.field")) : CoefField::rationals();
  return PolyRing::make(f, std::move(names));
}

Json polys_to_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Polynomial poly_from_json(const Json& j, const RingPtr& ring, const std::string& where) {
  try {
    return Polynomial::parse(string_at(j, where), ring);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Polynomial> polys_from_json(const Json& j, const RingPtr& ring, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of polynomials");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(poly_from_json(j[i], ring, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json ideal_to_json(const IdealPresentation& ideal) {
  return Json{{"ring", ring_to_json(ideal.ring)}, {"gens", polys_to_json(ideal.gens)}};
}

IdealPresentation ideal_from_json(const Json& j) {
  RingPtr ring = ring_from_json(field(j, "ring", "ideal"));
  auto gens = polys_from_json(field(j, "gens", "ideal"), ring, "gens");
  if (gens.empty()) throw InputError("ideal: \"gens\" is empty");
  return IdealPresentation(ring, std::move(gens));
}

Json point_fields(const QuadricPoint& v) {
  return Json{{"n", v.n()}, {"f", polys_to_json(v.f)}, {"g", polys_to_json(v.g)}, {"s", v.s.to_string()}};
}

QuadricPoint point_fields_from_json(const Json& j, const RingPtr& ring, const std::string& where) {
  auto f = polys_from_json(field(j, "f", where), ring, where + ".f");
  auto g = polys_from_json(field(j, "g", where), ring, where + ".g");
  Polynomial s = poly_from_json(field(j, "s", where), ring, where + ".s");
  if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != f.size())) {
    throw InputError(where + ": \"n\" does not match the length of f");
  }
  if (f.empty() || f.size() != g.size()) throw InputError(where + ": f and g must be nonempty lists of equal length");
  return QuadricPoint(ring, std::move(f), std::move(g), std::move(s));
}

Json point_to_json(const QuadricPoint& v) {
  Json j = point_fields(v);
  j["ring"] = ring_to_json(v.ring);
  return j;
}

QuadricPoint point_from_json(const Json& j) {
  return point_fields_from_json(j, ring_from_json(field(j, "ring", "point")), "point");
}

Json orientation_to_json(const LocalOrientation& o) {
  Json j = ideal_to_json(o.ideal);
  j["reps"] = polys_to_json(o.reps);
  return j;
}

Json certificate_to_json(const MembershipCertificate& c) {
  return Json{{"target", c.target.to_string()}, {"coefficients", polys_to_json(c.coefficients)}};
}

MembershipCertificate certificate_from_json(const Json& j, const RingPtr& ring, const std::string& where) {
  return MembershipCertificate{poly_from_json(field(j, "target", where), ring, where + ".target"),
                               polys_from_json(field(j, "coefficients", where), ring, where + ".coefficients")};
}

Json homotopy_to_json(const HomotopyPoint& h) {
  Json j = point_fields(h.point);
  j["parameter"] = h.param;
  return j;
}

HomotopyPoint homotopy_from_json(const Json& j, const RingPtr& base) {
  std::string param = string_at(field(j, "parameter", "homotopy"), "homotopy.parameter");
  RingPtr r = homotopy_ring(base, param);
  return HomotopyPoint(point_fields_from_json(j, r, "homotopy"), param);
}

Json chain_to_json(const HomotopyChain& c) {
  Json steps = Json::array();
  for (const auto& h : c.steps) {
    Json s = point_fields(h.point);
    s.erase("n");
    steps.push_back(std::move(s));
  }
  return Json{{"ring", ring_to_json(c.base)},
              {"parameter", c.param},
              {"start", point_fields(c.start)},
              {"end", point_fields(c.end)},
              {"steps", std::move(steps)}};
}

HomotopyChain chain_from_json(const Json& j) {
  RingPtr base = ring_from_json(field(j, "ring", "chain"));
  std::string param = string_at(field(j, "parameter", "chain"), "chain.parameter");
  RingPtr r = homotopy_ring(base, param);
  const Json& steps = field(j, "steps", "chain");
  if (!steps.is_array()) throw InputError("chain: \"steps\" must be a list");
  HomotopyChain c{base, param, point_fields_from_json(field(j, "start", "chain"), base, "chain.start"),
                  point_fields_from_json(field(j, "end", "chain"), base, "chain.end"), {}};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    c.steps.emplace_back(point_fields_from_json(steps[k], r, "chain.steps[" + std::to_string(k) + "]"), param);
  }
  return c;
}

Json lift_to_json(const LiftCertificate& c) {
  auto certs = [](const std::vector<MembershipCertificate>& cs) {
    Json out = Json::array();
    for (const auto& m : cs) out.push_back(certificate_to_json(m));
    return out;
  };
  Json j{{"ring", ring_to_json(c.point.ring)},
         {"point", point_fields(c.point)},
         {"mu", polys_to_json(c.mu)},
         {"lifted", polys_to_json(c.lifted())},
         {"forward", certs(c.forward)},
         {"backward", certs(c.backward)},
         {"mu_in_square", certs(c.mu_in_square)}};
  if (c.r) {
    j["r"] = *c.r;
  } else {
    j["r"] = "plain";
  }
  return j;
}

LiftCertificate lift_from_json(const Json& j) {
  RingPtr ring = ring_from_json(field(j, "ring", "lift"));
  auto certs = [&](const char* key) {
    std::vector<MembershipCertificate> out;
    const Json& arr = field(j, key, "lift");
    if (!arr.is_array()) throw InputError(std::string("lift: \"") + key + "\" must be a list");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(certificate_from_json(arr[i], ring, std::string("lift.") + key + "[" + std::to_string(i) + "]"));
    }
    return out;
  };
  LiftCertificate c{point_fields_from_json(field(j, "point", "lift"), ring, "lift.point"),
                    polys_from_json(field(j, "mu", "lift"), ring, "lift.mu"),
                    std::nullopt,
                    certs("forward"),
                    certs("backward"),
                    certs("mu_in_square")};
  const Json& r = field(j, "r", "lift");
  if (r.is_number_unsigned() && r.get<unsigned>() > 0) {
    c.r = r.get<unsigned>();
  } else if (!(r.is_string() && r.get<std::string>() == "plain")) {
    throw InputError("lift: \"r\" must be a positive integer or \"plain\"");
  }
  return c;
}

Json trivialization_to_json(const MonicTrivialization& t) {
  return Json{{"ring", ring_to_json(t.input.ring())},
              {"var", t.var},
              {"gens", polys_to_json(t.input.ideal.gens)},
              {"reps", polys_to_json(t.input.reps)},
              {"witness", t.witness.to_string()},
              {"evenized_reps", polys_to_json(t.evenized.reps)},
              {"evenized_f1", t.evenized_f1.to_string()},
              {"deltas", t.deltas},
              {"psi", homotopy_to_json(t.psi)},
              {"contracted_ideal", polys_to_json(t.contracted_ideal.gens)},
              {"chain", chain_to_json(t.chain)}};
}

}  // namespace ciobs::io
