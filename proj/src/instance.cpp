#include "instance.hpp"

#include "errors.hpp"
#include "serialize.hpp"

namespace g2forge {

namespace {

Instance make_builtin(const std::string& name, const Scalar& param) {
  Instance inst;
  inst.kind = Instance::Kind::builtin;
  inst.builtin_name = name;
  inst.builtin_param = param;
  if (name == "gs") inst.family = builtin_gs(param);
  else if (name == "sa") inst.family = builtin_sa(param);
  else if (name == "fr") inst.family = builtin_fr();
  else throw bad_input("unknown builtin '" + name + "' (expected gs, sa or fr)");
  inst.algebra = inst.family->algebra();
  return inst;
}

}  // namespace

Instance Instance::from_json_text(const std::string& text) {
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bad_input(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object() || !cfg.contains("kind"))
    throw bad_input("config must be an object with a 'kind' field");
  const std::string kind = cfg["kind"].get<std::string>();

  if (kind == "family") {
    for (const char* key : {"A1", "A", "B", "C"})
      if (!cfg.contains(key)) throw bad_input(std::string("family config misses ") + key);
    Matrix a1 = matrix_from_json(cfg["A1"], 2, 2);
    Matrix a = matrix_from_json(cfg["A"], 4, 4);
    Matrix b = matrix_from_json(cfg["B"], 4, 4);
    Matrix c = matrix_from_json(cfg["C"], 4, 4);
    Instance inst;
    inst.kind = Kind::family;
    inst.family = FamilySpec(a1, a, b, c);  // throws constraint errors by name
    inst.algebra = inst.family->algebra();
    return inst;
  }

  if (kind == "structure-constants") {
    if (!cfg.contains("c") || !cfg["c"].is_array())
      throw bad_input("structure-constants config needs an array 'c'");
    std::vector<std::tuple<int, int, int, Scalar>> entries;
    for (const auto& row : cfg["c"]) {
      if (!row.is_array() || row.size() != 4)
        throw bad_input("each structure constant is [i, j, k, value]");
      entries.emplace_back(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                           scalar_from_json(row[3]));
    }
    Instance inst;
    inst.kind = Kind::structure_constants;
    inst.algebra = LieAlgebra::from_structure_constants(entries);
    if (!inst.algebra.is_lie_algebra())
      throw constraint_error("structure constants violate the Jacobi identity");
    return inst;
  }

  if (kind == "builtin") {
    if (!cfg.contains("name")) throw bad_input("builtin config needs 'name'");
    Scalar param(0);
    if (cfg.contains("param")) param = scalar_from_json(cfg["param"]);
    return make_builtin(cfg["name"].get<std::string>(), param);
  }

  throw bad_input("unknown config kind '" + kind + "'");
}

Instance Instance::from_builtin(const std::string& name,
                                const std::optional<std::string>& param) {
  std::string base = name;
  std::optional<std::string> param_text = param;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    base = name.substr(0, colon);
    param_text = name.substr(colon + 1);
  }
  Scalar value(0);
  if (param_text) {
    auto parsed = Scalar::parse(*param_text);
    if (!parsed) throw bad_input("cannot parse builtin parameter '" + *param_text + "'");
    value = *parsed;
  }
  return make_builtin(base, value);
}

}  // namespace g2forge
