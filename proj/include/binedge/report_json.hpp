#ifndef BINEDGE_REPORT_JSON_HPP
#define BINEDGE_REPORT_JSON_HPP

#include <string>

#include "binedge/bounds.hpp"
#include "json.hpp"

namespace binedge {

using Json = nlohmann::ordered_json;

/// {graph, m, char, ht, mu, bounds:{pd,cd,ara}, flags:{ci,aci,cci,stci}, provenance}
Json report_to_json(const BoundsReport& report);
std::string format_report_text(const BoundsReport& report);

Json graph_to_json(const SimpleGraph& g);

}  // namespace binedge

#endif  // BINEDGE_REPORT_JSON_HPP
