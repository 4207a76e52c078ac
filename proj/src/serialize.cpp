#include "ngcat/serialize.hpp"

namespace ngcat {

nlohmann::ordered_json group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["mul"] = std::vector<Elem>(g.table().begin(), g.table().end());
  std::vector<std::string> labels;
  for (Elem x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  j["labels"] = std::move(labels);
  if (g.cyclic_cert()) {
    auto cert = nlohmann::ordered_json::array();
    for (const auto& f : *g.cyclic_cert()) cert.push_back({{"generator", f.generator}, {"order", f.order}});
    j["cyclic_cert"] = std::move(cert);
  }
  return j;
}

GroupPtr group_from_json(const nlohmann::json& j) {
  try {
    const int order = j.at("order").get<int>();
    auto table = j.at("mul").get<std::vector<Elem>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::optional<CyclicCertificate> cert;
    if (j.contains("cyclic_cert")) {
      cert.emplace();
      for (const auto& f : j.at("cyclic_cert")) cert->push_back({f.at("generator").get<Elem>(), f.at("order").get<int>()});
    }
    return std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels), std::move(cert));
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(std::string("malformed group document: ") + e.what());
  }
}

nlohmann::ordered_json cochain_to_json(const Cochain& c, const std::string& group_ref,
                                       const std::string& base_group_ref) {
  nlohmann::ordered_json j;
  j["group_ref"] = group_ref;
  j["degree"] = c.degree();
  j["modulus"] = c.modulus();
  if (const auto* table = c.dense_table()) {
    j["table"] = *table;
  } else {
    nlohmann::ordered_json p;
    p["map"] = *c.pullback_map();
    p["scale"] = c.scale();
    p["base"] = cochain_to_json(*c.pullback_base(), base_group_ref);
    j["pullback"] = std::move(p);
  }
  return j;
}

}  // namespace ngcat
