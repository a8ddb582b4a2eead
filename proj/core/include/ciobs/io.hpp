#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ciobs/lifting.hpp"
#include "ciobs/monic.hpp"

namespace ciobs::io {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline; keys come out sorted.
std::string dump(const Json& j);

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);

Json polys_to_json(const std::vector<Polynomial>& ps);
std::vector<Polynomial> polys_from_json(const Json& j, const RingPtr& ring, const std::string& where);
Polynomial poly_from_json(const Json& j, const RingPtr& ring, const std::string& where);

/// {"ring", "gens"}
Json ideal_to_json(const IdealPresentation& ideal);
IdealPresentation ideal_from_json(const Json& j);

/// {"ring", "n", "f", "g", "s"}
Json point_to_json(const QuadricPoint& v);
QuadricPoint point_from_json(const Json& j);
/// The same fields without "ring", read over a known ring.
Json point_fields(const QuadricPoint& v);
QuadricPoint point_fields_from_json(const Json& j, const RingPtr& ring, const std::string& where);

/// {"ring", "gens", "reps"}
Json orientation_to_json(const LocalOrientation& o);

Json certificate_to_json(const MembershipCertificate& c);
MembershipCertificate certificate_from_json(const Json& j, const RingPtr& ring, const std::string& where);

/// {"ring" (base), "parameter", "start", "end", "steps": [{"f", "g", "s"}]}
Json chain_to_json(const HomotopyChain& c);
HomotopyChain chain_from_json(const Json& j);

Json homotopy_to_json(const HomotopyPoint& h);
HomotopyPoint homotopy_from_json(const Json& j, const RingPtr& base);

Json lift_to_json(const LiftCertificate& c);
LiftCertificate lift_from_json(const Json& j);

Json trivialization_to_json(const MonicTrivialization& t);

}  // namespace ciobs::io
