#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hbforge/ideal.hpp"
#include "hbforge/points.hpp"
#include "hbforge/rees.hpp"
#include "hbforge/resolutions.hpp"

namespace hbforge {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Json to_json(const std::vector<Polynomial>& ps);
Json to_json(const Ideal& ideal);
Json to_json(const PolyMatrix& m);
Json to_json(const BettiTable& b);
Json to_json(const HilbertData& h);
Json to_json(const FreeResolution& res);
Json to_json(const ReesPresentation& rp);
Json to_json(const BidegreeTable& t);
Json to_json(const PointSet& ps);
Json to_json(const PositionReport& rep);
Json to_json(const UniformResult& u);
Json to_json(const Sector2Report& rep);
Json to_json(const AcyclicityCertificate& c);

// "a, b; c, d" -> 2x2 matrix; rows split on ';', entries on ','.
PolyMatrix parse_matrix_text(const RingPtr& ring, const std::string& text);
// Comma-separated polynomials, respecting parentheses.
std::vector<Polynomial> parse_poly_list(const RingPtr& ring, const std::string& text);
PointSet point_set_from_json(const Json& j);

}  // namespace hbforge
