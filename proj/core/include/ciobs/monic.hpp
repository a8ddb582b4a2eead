#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ciobs/homotopy.hpp"
#include "ciobs/orientation.hpp"

namespace ciobs {

enum class MonicStrategy { random_linear, power_substitution };

std::string to_string(MonicStrategy s);
MonicStrategy parse_monic_strategy(const std::string& text);

/// x_i -> x_i + shift_i for every variable other than `var`, where shift_i is
/// a polynomial in `var` alone. The inverse subtracts the same shifts.
struct VariableChange {
  RingPtr ring;
  std::string var;
  std::vector<Polynomial> shifts;  // one per ring variable; zero for `var`

  bool is_identity() const;
  Polynomial apply(const Polynomial& p) const;
  Polynomial invert(const Polynomial& p) const;
  IdealPresentation apply(const IdealPresentation& ideal) const;
};

struct MonicResult {
  IdealPresentation ideal;  // transformed generators
  VariableChange change;
  MonicStrategy strategy;
  std::size_t monic_index;  // generator that became monic (and was normalized)
  unsigned attempts;
};

struct MonicOptions {
  std::uint64_t seed = 1;
  unsigned max_attempts = 64;
  int coefficient_bound = 5;
};

/// Change of variables making some generator monic in `var`. Over F_p only
/// power substitution is used. Throws InputError for the zero ideal and
/// VerificationError when attempts run out.
MonicResult make_monic(const IdealPresentation& ideal, const std::string& var, MonicStrategy strategy,
                       const MonicOptions& options = {});

/// Replace f_1 by f_1 + m^(2N), with N >= 1 minimal such that 2N deg(m) exceeds
/// deg f_1 in `var`; identity when f_1 is already monic of even degree.
LocalOrientation evenize(const LocalOrientation& o, const std::string& var, const Polynomial& monic_witness);

/// A member of the ideal that is monic in `var` of positive degree, searched
/// among the generators, representatives and Groebner bases. For the unit
/// ideal this is `var` itself.
std::optional<Polynomial> find_monic_member(const LocalOrientation& o, const std::string& var);

enum class DeltaRule { per_generator, uniform };

struct TrivializeOptions {
  DeltaRule delta = DeltaRule::per_generator;
  std::optional<Polynomial> witness;
};

struct MonicTrivialization {
  LocalOrientation input;
  std::string var;
  Polynomial witness;
  LocalOrientation evenized;
  Polynomial evenized_f1;
  std::vector<long> deltas;  // clearing exponent used for each F_i
  HomotopyPoint psi;
  IdealPresentation contracted_ideal;
  HomotopyChain chain;
};

/// Builds psi(X, T) from X -> X - T + 1/T and the chain from to_point(o) to
/// zero, checking every intermediate claim. Throws DomainError in
/// characteristic 2 and VerificationError when no monic member exists.
MonicTrivialization trivialize_monic(const LocalOrientation& o, const std::string& var,
                                     const TrivializeOptions& options = {});

/// Cleared images of the reps and the squared generators under the
/// substitution, saturated by T. Exposed to compare delta conventions.
IdealPresentation contracted_ideal(const LocalOrientation& evenized, const std::string& var, DeltaRule rule);

}  // namespace ciobs
