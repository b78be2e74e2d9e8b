#pragma once

#include <json.hpp>

#include "orbitcert/helson.hpp"

namespace orbitcert {

using Json = nlohmann::json;

/// Complex scalars encode as [re, im]; matrices row-major as arrays of rows.
Json to_json(Cplx z);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const RVec& v);
Cplx cplx_from_json(const Json& j);
Vec vec_from_json(const Json& j);
Mat mat_from_json(const Json& j);

Json to_json(const HelsonImage& image);

/// Group spec: {"kind":"cyclic","n":..}, {"kind":"dihedral","m":..},
/// {"kind":"product","factors":[..]}, {"kind":"table","cayley":[[..]]}.
GroupPtr group_from_json(const Json& spec);
Json group_summary(const FiniteGroup& g);

/// Representation spec: {"kind":"left_regular"} | {"kind":"right_regular"} |
/// {"kind":"trivial","dim":..} | {"kind":"matrices","matrices":[..]} |
/// {"kind":"action","perms":[[..]],"jacobian":[[..]]}.
Representation representation_from_json(const GroupPtr& group, const Json& spec, double tol);

}  // namespace orbitcert
