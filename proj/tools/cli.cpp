#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ciobs/error.hpp"
#include "ciobs/io.hpp"

namespace ciobs::cli {

namespace {

using io::Json;

struct Options {
  std::string order = "grevlex";
  std::string field;
  std::uint64_t seed = 1;
  unsigned degree_bound = 2;
  std::string pool = "-1,0,1";
  std::size_t max_candidates = 100000;
  std::string output;
  std::vector<std::string> files;
  std::string poly;
  bool check = false;
  std::string var;
  std::string reps;
  std::string mu;
  unsigned r = 0;
  bool make_monic = false;
  std::string strategy = "random-linear";
};

// Result of one command before it is written out.
struct Outcome {
  int code = ok;
  Json payload;
  std::string message;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Json load(const std::string& path, const Options& opt) {
  Json j = io::read_json_file(path);
  if (!opt.field.empty() && j.is_object()) {
    for (const char* key : {"ring", "source", "target"}) {
      if (j.contains(key) && j[key].is_object()) j[key]["field"] = opt.field;
    }
  }
  return j;
}

const std::string& file_arg(const Options& opt, std::size_t i, const char* what) {
  if (opt.files.size() <= i) throw InputError(std::string("missing ") + what + " file");
  return opt.files[i];
}

LocalOrientation load_orientation(const Json& j, const Options& opt) {
  IdealPresentation ideal = io::ideal_from_json(j);
  std::vector<Polynomial> reps;
  if (!opt.reps.empty()) {
    for (const auto& t : split_list(opt.reps)) reps.push_back(Polynomial::parse(t, ideal.ring));
  } else if (j.contains("reps")) {
    reps = io::polys_from_json(j.at("reps"), ideal.ring, "reps");
  } else {
    throw InputError("orientation: give \"reps\" in the file or --reps");
  }
  if (reps.empty()) throw InputError("orientation: reps must be nonempty");
  return verify_orientation(ideal, std::move(reps));
}

// Re-checks everything certificate-like in a bundle; returns the first failure.
std::optional<std::string> verify_bundle(const Json& j) {
  try {
    bool checked = false;
    if (j.contains("steps")) {
      auto [start, end] = chain_validate(io::chain_from_json(j));
      checked = true;
    }
    std::optional<std::pair<QuadricPoint, QuadricPoint>> ends;
    if (j.contains("chain")) {
      ends = chain_validate(io::chain_from_json(j.at("chain")));
      checked = true;
    }
    if (j.contains("psi") && j.contains("ring")) {
      RingPtr ring = io::ring_from_json(j.at("ring"));
      auto psi = io::homotopy_from_json(j.at("psi"), ring);
      if (auto bad = validate_homotopy(psi)) return "psi: " + bad->what + ": " + bad->residual.to_string();
      auto at0 = endpoint(psi, 0);
      for (std::size_t i = 0; i < at0.n(); ++i) {
        if (i == 0 ? !at0.f[i].is_one() : !at0.f[i].is_zero()) return "psi(X, 0) does not have f = (1, 0, ..., 0)";
      }
      if (j.contains("evenized_reps") &&
          endpoint(psi, 1).f != io::polys_from_json(j.at("evenized_reps"), ring, "evenized_reps")) {
        return "psi(X, 1) does not match the evenized reps";
      }
      if (ends && j.contains("reps")) {
        if (ends->first.f != io::polys_from_json(j.at("reps"), ring, "reps")) return "chain does not start at the reps";
        if (!ends->second.is_zero()) return "chain does not end at 0";
      }
      checked = true;
    }
    if (j.contains("certificate")) {
      auto cert = io::lift_from_json(j.at("certificate"));
      if (auto bad = check_lift(cert)) return "lift certificate: " + bad->what + ": " + bad->residual.to_string();
      if (ends && (ends->first != cert.point || !ends->second.is_zero())) return "chain does not run from the point to 0";
      checked = true;
    }
    if (j.contains("forward")) {
      if (auto bad = check_lift(io::lift_from_json(j))) return "lift certificate: " + bad->what + ": " + bad->residual.to_string();
      checked = true;
    }
    if (j.contains("coefficients") && j.contains("gens")) {
      IdealPresentation I = io::ideal_from_json(j);
      auto cert = io::certificate_from_json(j, I.ring, "certificate");
      auto res = cert.residual(I);
      if (!res.is_zero()) return "membership certificate residual " + res.to_string();
      checked = true;
    }
    if (j.contains("f") && j.contains("g") && j.contains("s") && j.contains("ring")) {
      if (auto bad = validate_point(io::point_from_json(j))) return "point: " + bad->what + ": " + bad->residual.to_string();
      checked = true;
    }
    if (!checked) return "nothing to verify in this file";
  } catch (const VerificationError& e) {
    return std::string(e.what()) + (e.residual().empty() ? "" : ": " + e.residual());
  }
  return std::nullopt;
}

Json gb_json(const ReducedGroebnerBasis& gb) {
  Json cof = Json::array();
  for (const auto& row : gb.cofactors) cof.push_back(io::polys_to_json(row));
  return Json{{"ring", io::ring_to_json(gb.ring)},
              {"order", gb.order.to_string()},
              {"gens", io::polys_to_json(gb.generators)},
              {"basis", io::polys_to_json(gb.basis)},
              {"cofactors", std::move(cof)}};
}

Outcome cmd_gb(const Options& opt) {
  auto I = io::ideal_from_json(load(file_arg(opt, 0, "ideal"), opt));
  auto gb = groebner(I, MonomialOrder::parse(opt.order));
  if (!gb.cofactor_identity_holds()) return {verification_failed, gb_json(gb), "cofactor identities fail"};
  return {ok, gb_json(gb), std::to_string(gb.basis.size()) + " basis elements"};
}

Outcome cmd_nf(const Options& opt) {
  auto I = io::ideal_from_json(load(file_arg(opt, 0, "ideal"), opt));
  if (opt.poly.empty()) throw InputError("nf: --poly is required");
  Polynomial p = Polynomial::parse(opt.poly, I.ring);
  auto gb = groebner(I, MonomialOrder::parse(opt.order));
  auto nf = normal_form(p, gb);
  return {ok,
          Json{{"ring", io::ring_to_json(I.ring)},
               {"order", gb.order.to_string()},
               {"polynomial", p.to_string()},
               {"remainder", nf.remainder.to_string()}},
          "normal form " + nf.remainder.to_string()};
}

Outcome cmd_member(const Options& opt) {
  Json j = load(file_arg(opt, 0, "ideal"), opt);
  if (opt.check) {
    if (!j.contains("coefficients")) throw InputError("member --check: file has no certificate");
    if (auto bad = verify_bundle(j)) return {verification_failed, Json(), *bad};
    return {ok, Json(), "certificate holds"};
  }
  auto I = io::ideal_from_json(j);
  if (opt.poly.empty()) throw InputError("member: --poly is required");
  Polynomial p = Polynomial::parse(opt.poly, I.ring);
  auto m = membership(p, groebner(I, MonomialOrder::parse(opt.order)));
  Json out = io::ideal_to_json(I);
  out["target"] = p.to_string();
  out["member"] = static_cast<bool>(m);
  if (!m) {
    out["remainder"] = m.remainder.to_string();
    return {verification_failed, out, p.to_string() + " is not a member; normal form " + m.remainder.to_string()};
  }
  out["coefficients"] = io::polys_to_json(m.certificate->coefficients);
  return {ok, out, p.to_string() + " is a member"};
}

Outcome cmd_kernel(const Options& opt) {
  Json j = load(file_arg(opt, 0, "map"), opt);
  if (!j.contains("source") || !j.contains("target") || !j.contains("images")) {
    throw InputError("kernel: expected \"source\", \"target\" and \"images\"");
  }
  RingPtr source = io::ring_from_json(j.at("source"));
  Json target_json = j.at("target");
  if (!target_json.contains("field")) target_json["field"] = source->field().to_string();
  RingPtr target = io::ring_from_json(target_json);
  auto images = io::polys_from_json(j.at("images"), target, "images");
  if (images.size() != source->nvars()) throw InputError("kernel: need one image per source variable");
  auto k = kernel_of_map(source, target, images);
  return {ok, io::ideal_to_json(k), "kernel has " + std::to_string(k.size()) + " generators"};
}

Outcome cmd_orient(const Options& opt) {
  auto o = load_orientation(load(file_arg(opt, 0, "orientation"), opt), opt);
  Json out = io::orientation_to_json(o);
  out["target"] = io::polys_to_json(o.target.gens);
  Json certs = Json::array();
  for (const auto& c : o.certs) certs.push_back(io::certificate_to_json(c));
  out["certificates"] = std::move(certs);
  return {ok, out, "local orientation verified"};
}

Outcome cmd_point(const Options& opt) {
  auto o = load_orientation(load(file_arg(opt, 0, "orientation"), opt), opt);
  auto w = nakayama_element(o);
  Json out = io::point_to_json(to_point(o, w));
  out["nakayama_method"] = w.method;
  return {ok, out, "point built (" + w.method + ")"};
}

Outcome cmd_trivialize(const Options& opt) {
  Json j = load(file_arg(opt, 0, "orientation"), opt);
  if (opt.var.empty()) throw InputError("trivialize: --var is required");
  auto o = load_orientation(j, opt);
  Json change;
  if (opt.make_monic) {
    MonicOptions mo;
    mo.seed = opt.seed;
    auto m = make_monic(o.ideal, opt.var, parse_monic_strategy(opt.strategy), mo);
    std::vector<Polynomial> reps;
    for (const auto& f : o.reps) reps.push_back(m.change.apply(f));
    o = verify_orientation(m.ideal, std::move(reps));
    change = Json{{"strategy", to_string(m.strategy)}, {"shifts", io::polys_to_json(m.change.shifts)},
                  {"attempts", m.attempts}};
  }
  auto t = trivialize_monic(o, opt.var);
  Json out = io::trivialization_to_json(t);
  if (!change.is_null()) out["change"] = std::move(change);
  return {ok, out, "trivialized: chain of " + std::to_string(t.chain.steps.size()) + " steps to 0"};
}

Outcome cmd_connect(const Options& opt) {
  auto v = io::point_from_json(load(file_arg(opt, 0, "first point"), opt));
  auto w = io::point_from_json(load(file_arg(opt, 1, "second point"), opt));
  auto c = connect_same_orientation(v, w);
  return {ok, io::chain_to_json(c), "chain of " + std::to_string(c.steps.size()) + " steps"};
}

Outcome cmd_verify_chain(const Options& opt) {
  Json j = load(file_arg(opt, 0, "chain"), opt);
  if (!j.contains("steps") && !j.contains("chain")) throw InputError("verify-chain: no chain in file");
  if (auto bad = verify_bundle(j)) return {verification_failed, Json(), *bad};
  const Json& c = j.contains("chain") ? j.at("chain") : j;
  return {ok, Json(), "chain valid: " + std::to_string(c.at("steps").size()) + " steps"};
}

Json lift_bundle(const LiftCertificate& cert) {
  Json out{{"certificate", io::lift_to_json(cert)}};
  if (cert.plain()) out["chain"] = io::chain_to_json(lift_to_chain(cert));
  return out;
}

Outcome cmd_lift_verify(const Options& opt) {
  Json j = load(file_arg(opt, 0, "point or certificate"), opt);
  if (j.contains("forward") || j.contains("certificate")) {
    if (auto bad = verify_bundle(j)) return {verification_failed, Json(), *bad};
    return {ok, Json(), "lift certificate holds"};
  }
  auto v = io::point_from_json(j);
  std::vector<Polynomial> mu;
  for (const auto& t : split_list(opt.mu)) mu.push_back(Polynomial::parse(t, v.ring));
  auto cert = opt.r > 0 ? verify_r_lift(v, mu, opt.r) : verify_lift(v, mu);
  return {ok, lift_bundle(cert), "lift certificate verified"};
}

Outcome cmd_lift_search(const Options& opt) {
  auto v = io::point_from_json(load(file_arg(opt, 0, "point"), opt));
  LiftSearchOptions so;
  so.degree_bound = opt.degree_bound;
  so.max_candidates = opt.max_candidates;
  so.pool.clear();
  for (const auto& t : split_list(opt.pool)) {
    try {
      Coef c(t);
      c.canonicalize();
      so.pool.push_back(c);
    } catch (const std::invalid_argument&) {
      throw InputError("--pool: '" + t + "' is not a rational number");
    }
  }
  auto res = search_lift(v, so);
  if (!res.certificate) {
    return {exhausted,
            Json{{"exhausted", true}, {"space_size", res.space_size}, {"tried", res.tried},
                 {"products", io::polys_to_json(res.products)}},
            "exhausted after " + std::to_string(res.tried) + " of " + std::to_string(res.space_size) + " candidates"};
  }
  return {ok, lift_bundle(*res.certificate), "lift found after " + std::to_string(res.tried) + " candidates"};
}

Outcome cmd_act(const Options& opt) {
  auto v = io::point_from_json(load(file_arg(opt, 0, "point"), opt));
  Json mj = io::read_json_file(file_arg(opt, 1, "matrix"));
  const Json& rows = mj.contains("matrix") ? mj.at("matrix") : mj;
  if (!rows.is_array()) throw InputError("act: matrix must be a list of rows");
  PolyMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) m.push_back(io::polys_from_json(rows[i], v.ring, "matrix[" + std::to_string(i) + "]"));
  return {ok, io::point_to_json(act(v, m)), "point moved"};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options opt;
  CLI::App app{"Certified computations on quadric points and local orientations", "ciobs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--order", opt.order, "Monomial order: lex, grevlex or elim:v1,v2");
  app.add_option("--field", opt.field, "Override the coefficient field: Q or Fp:p");
  app.add_option("--seed", opt.seed, "Seed for randomized steps");
  app.add_option("--degree-bound", opt.degree_bound, "Degree bound for lift search");
  app.add_option("--pool", opt.pool, "Coefficient pool for lift search, e.g. -1,0,1");
  app.add_option("--max-candidates", opt.max_candidates, "Candidate cap for lift search");
  app.add_option("-o,--output", opt.output, "Write the result JSON here");

  std::map<std::string, std::function<Outcome(const Options&)>> handlers{
      {"gb", cmd_gb},         {"nf", cmd_nf},
      {"member", cmd_member}, {"kernel", cmd_kernel},
      {"orient", cmd_orient}, {"point", cmd_point},
      {"trivialize", cmd_trivialize}, {"connect", cmd_connect},
      {"verify-chain", cmd_verify_chain}, {"lift-verify", cmd_lift_verify},
      {"lift-search", cmd_lift_search}, {"act", cmd_act}};
  const std::map<std::string, std::string> help{
      {"gb", "Reduced Groebner basis with cofactors"},
      {"nf", "Normal form of --poly"},
      {"member", "Membership of --poly with certificate; --check re-validates a certificate file"},
      {"kernel", "Kernel of a polynomial map"},
      {"orient", "Verify a local orientation"},
      {"point", "Quadric point of a local orientation"},
      {"trivialize", "Chain from an orientation's point to 0 (ideal monic in --var)"},
      {"connect", "Chain between two points with the same ideal and orientation"},
      {"verify-chain", "Re-validate a chain or bundle file"},
      {"lift-verify", "Verify a lift (--mu, optional --r) or re-check a certificate file"},
      {"lift-search", "Bounded search for a lift"},
      {"act", "Act on a point by an orthogonal matrix"}};

  std::string chosen;
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    sub->add_option("files", opt.files, "Input JSON files");
    if (name == "nf" || name == "member") sub->add_option("--poly", opt.poly, "Polynomial");
    if (name == "member") sub->add_flag("--check", opt.check, "Re-validate a certificate file");
    if (name == "orient" || name == "point" || name == "trivialize") {
      sub->add_option("--reps", opt.reps, "Comma-separated representatives");
    }
    if (name == "trivialize") {
      sub->add_option("--var", opt.var, "Variable X");
      sub->add_flag("--make-monic", opt.make_monic, "Change variables first");
      sub->add_option("--strategy", opt.strategy, "random-linear or power-substitution");
    }
    if (name == "lift-verify") {
      sub->add_option("--mu", opt.mu, "Comma-separated corrections");
      sub->add_option("--r", opt.r, "Exponent r (omit for the plain property)");
    }
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.log = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = input_error;
    result.log = std::string("error: ") + e.what() + "\n";
    return result;
  }

  Outcome outcome;
  try {
    outcome = handlers.at(chosen)(opt);
  } catch (const VerificationError& e) {
    result.exit_code = verification_failed;
    result.log = std::string("verification failed: ") + e.what() + (e.residual().empty() ? "" : "\nresidual: " + e.residual()) + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = input_error;
    result.log = std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.exit_code = input_error;
    result.log = std::string("error: ") + e.what() + "\n";
    return result;
  }

  result.exit_code = outcome.code;
  if (outcome.code == ok && !outcome.payload.is_null()) {
    // Outputs must re-validate from their serialized form alone.
    Json reread = io::parse_json(io::dump(outcome.payload), "output");
    bool has_certificates = reread.contains("steps") || reread.contains("chain") || reread.contains("certificate") ||
                            reread.contains("coefficients") || (reread.contains("f") && reread.contains("s"));
    if (has_certificates) {
      if (auto bad = verify_bundle(reread)) {
        result.exit_code = verification_failed;
        result.log = "emitted output failed re-validation: " + *bad + "\n";
        return result;
      }
    }
  }
  if (!outcome.payload.is_null()) {
    std::string text = io::dump(outcome.payload);
    if (!opt.output.empty()) {
      std::ofstream out(opt.output);
      if (!out) {
        result.exit_code = input_error;
        result.log = "error: cannot write " + opt.output + "\n";
        return result;
      }
      out << text;
      result.artifacts.push_back(opt.output);
      result.log = outcome.message + "\nwrote " + opt.output + "\n";
      return result;
    }
    result.log = text;
    if (outcome.code != ok) result.log = outcome.message + "\n" + text;
    return result;
  }
  result.log = outcome.message + "\n";
  return result;
}

}  // namespace ciobs::cli
