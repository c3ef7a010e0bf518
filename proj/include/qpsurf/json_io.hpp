#pragma once

#include <json.hpp>

#include "qpsurf/ext_algebra.hpp"
#include "qpsurf/ktheory.hpp"
#include "qpsurf/potential.hpp"
#include "qpsurf/surface.hpp"
#include "qpsurf/transport.hpp"

namespace qpsurf {

using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json potential_to_json(const Potential& w);
Potential potential_from_json(const Json& j);

Json qp_to_json(const QP& qp);
QP qp_from_json(const Json& j);

Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json egraph_to_json(const ExchangeGraph& g);

Json ext_table_to_json(const ExtTable& t);

Json transport_to_json(const TransportMap& t);

Json charge_to_json(const CentralCharge& z);
CentralCharge charge_from_json(const Json& j);

}  // namespace qpsurf
