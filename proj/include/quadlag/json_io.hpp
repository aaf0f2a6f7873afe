#pragma once

#include "quadlag/lagrangian.hpp"
#include "quadlag/massey.hpp"

#include "json.hpp"

namespace quadlag {

using Json = nlohmann::ordered_json;

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json system_to_json(const QuadricSystem& qs);
QuadricSystem system_from_json(const Json& j);

Json complex_to_json(const SComplex& k);
SComplex complex_from_json(const Json& j);

Json table_to_json(const CohomologyTable& t);

/* plain Z2 Betti vector in the cohomology-table layout */
Json betti_to_json(const std::vector<unsigned long long>& b);

Json cochain_to_json(const KCochain& c);
KCochain cochain_from_json(const Json& j, int n);

Json report_to_json(const LagrangianReport& rep);

}  // namespace quadlag
