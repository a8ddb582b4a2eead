#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ciobs/quadric.hpp"

namespace ciobs {

/// A point of Q_2n over A[T]. The parameter is a named variable of the
/// point's ring, appended after the variables of A.
struct HomotopyPoint {
  HomotopyPoint(QuadricPoint point, std::string param);

  QuadricPoint point;
  std::string param;

  const RingPtr& ring() const noexcept { return point.ring; }
  /// The ring without the parameter.
  RingPtr base_ring() const;

  friend bool operator==(const HomotopyPoint& a, const HomotopyPoint& b) {
    return a.param == b.param && a.point == b.point;
  }
};

/// Name used for the parameter over `base`: "T" unless taken.
std::string homotopy_parameter(const RingPtr& base);
RingPtr homotopy_ring(const RingPtr& base, const std::string& param);

std::optional<Violation> validate_homotopy(const HomotopyPoint& h);
/// Coordinate-wise evaluation at T = t, for t in {0, 1}.
QuadricPoint endpoint(const HomotopyPoint& h, int t);
/// T -> 1 - T.
HomotopyPoint reverse(const HomotopyPoint& h);
HomotopyPoint constant_homotopy(const QuadricPoint& v, const std::string& param);

/// Steps with endpoint(steps[k], 1) = endpoint(steps[k + 1], 0), running from
/// `start` to `end`. Every intermediate point is stored.
struct HomotopyChain {
  RingPtr base;
  std::string param;
  QuadricPoint start;
  QuadricPoint end;
  std::vector<HomotopyPoint> steps;
};

/// Single-step chain.
HomotopyChain chain_of(const HomotopyPoint& h);
/// Re-checks every step and every junction; throws VerificationError naming
/// the step and first differing coordinate. Returns (start, end).
std::pair<QuadricPoint, QuadricPoint> chain_validate(const HomotopyChain& c);
/// Throws VerificationError unless end(a) = start(b) exactly.
HomotopyChain chain_concat(const HomotopyChain& a, const HomotopyChain& b);
HomotopyChain chain_reverse(const HomotopyChain& c);

/// (f; g + T(g' - g); s). Requires sum f_i (g_i - g'_i) = 0.
HomotopyPoint move_cofactor(const QuadricPoint& v, const std::vector<Polynomial>& g_new);
/// Chain from (f; g; s) to (f; g'; s'), both valid with the same f, where s'
/// is a Nakayama element for I(v) = (f, s).
HomotopyChain move_nakayama(const QuadricPoint& v, const Polynomial& s_new,
                            const std::vector<Polynomial>& g_new);
/// ((1 - T) f; 0; 0). Requires g = 0 and s = 0.
HomotopyPoint scale_f_to_zero(const QuadricPoint& v);
/// Three steps from a point with f_1 = 1 to the zero point.
HomotopyChain unit_collapse(const QuadricPoint& v);
/// Chain from v to w when I(v) = I(w) and f_i - f'_i lie in I(v)^2.
HomotopyChain connect_same_orientation(const QuadricPoint& v, const QuadricPoint& w);

/// Index and name ("f2", "g1", "s") of the first coordinate where a and b
/// differ, or nullopt when they are equal.
std::optional<std::pair<std::size_t, std::string>> first_difference(const QuadricPoint& a,
                                                                    const QuadricPoint& b);

}  // namespace ciobs
