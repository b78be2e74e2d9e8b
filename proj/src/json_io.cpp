#include "orbitcert/json_io.hpp"

namespace orbitcert {

Json to_json(Cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const RVec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Cplx cplx_from_json(const Json& j) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Cplx(j[0].get<double>(), j[1].get<double>());
  throw ConfigError("expected a number or [re, im] pair");
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("expected an array encoding a vector");
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = cplx_from_json(j[i]);
  return v;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a nonempty array of rows");
  const size_t cols = j[0].size();
  Mat m(j.size(), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ConfigError("ragged matrix rows");
    for (size_t k = 0; k < cols; ++k) m(static_cast<int>(i), static_cast<int>(k)) = cplx_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const HelsonImage& image) {
  Json fibers = Json::array();
  for (const auto& f : image.fibers)
    fibers.push_back({{"label", f.label}, {"weight", f.weight}, {"matrix", to_json(f.value.matrix)}});
  return Json{{"fibers", fibers}};
}

GroupPtr group_from_json(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) throw ConfigError("group spec needs a \"kind\"");
  const std::string kind = spec["kind"].get<std::string>();
  try {
    if (kind == "cyclic") return FiniteGroup::cyclic(spec.at("n").get<int>());
    if (kind == "dihedral") return FiniteGroup::dihedral(spec.at("m").get<int>());
    if (kind == "product") {
      const auto& factors = spec.at("factors");
      if (!factors.is_array() || factors.empty()) throw ConfigError("product needs factors");
      GroupPtr acc = group_from_json(factors[0]);
      for (size_t i = 1; i < factors.size(); ++i)
        acc = FiniteGroup::direct_product(*acc, *group_from_json(factors[i]));
      return acc;
    }
    if (kind == "table") {
      const auto table = spec.at("cayley").get<std::vector<std::vector<int>>>();
      std::vector<std::string> labels;
      if (spec.contains("labels")) labels = spec["labels"].get<std::vector<std::string>>();
      return FiniteGroup::from_cayley_table(table, std::move(labels));
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad group spec: ") + e.what());
  }
  throw ConfigError("unknown group kind \"" + kind + "\"");
}

Json group_summary(const FiniteGroup& g) {
  return Json{{"order", g.order()}, {"abelian", g.is_abelian()}, {"identity", g.identity()}};
}

Representation representation_from_json(const GroupPtr& group, const Json& spec, double tol) {
  if (!spec.is_object() || !spec.contains("kind")) throw ConfigError("representation spec needs a \"kind\"");
  const std::string kind = spec["kind"].get<std::string>();
  try {
    if (kind == "left_regular") return left_regular(group);
    if (kind == "right_regular") return right_regular(group);
    if (kind == "trivial") return trivial_representation(group, spec.value("dim", 1));
    if (kind == "matrices") {
      std::vector<Mat> mats;
      for (const auto& m : spec.at("matrices")) mats.push_back(mat_from_json(m));
      return make_representation(group, std::move(mats), tol);
    }
    if (kind == "action") {
      auto perms = spec.at("perms").get<std::vector<std::vector<int>>>();
      if (spec.contains("jacobian")) {
        const auto jac = spec["jacobian"].get<std::vector<std::vector<double>>>();
        RMat j(jac.size(), jac.empty() ? 0 : jac[0].size());
        for (size_t r = 0; r < jac.size(); ++r) {
          if (jac[r].size() != static_cast<size_t>(j.cols())) throw ConfigError("ragged jacobian");
          for (size_t c = 0; c < jac[r].size(); ++c) j(static_cast<int>(r), static_cast<int>(c)) = jac[r][c];
        }
        return action_representation(make_group_action(group, std::move(perms), std::move(j), tol));
      }
      return action_representation(make_group_action(group, std::move(perms)));
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad representation spec: ") + e.what());
  }
  throw ConfigError("unknown representation kind \"" + kind + "\"");
}

}  // namespace orbitcert
