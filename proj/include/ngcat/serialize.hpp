#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ngcat/cochain.hpp"
#include "ngcat/group.hpp"

namespace ngcat {

/// {order, mul (row-major), labels, cyclic_cert?}; cyclic_cert is a list of
/// {generator, order}.
nlohmann::ordered_json group_to_json(const FiniteGroup& g);
/// Inverse of group_to_json; the table and certificate are re-validated.
GroupPtr group_from_json(const nlohmann::json& j);

/// {group_ref, degree, modulus, table} for dense cochains, or
/// {group_ref, degree, modulus, pullback: {map, scale, base}} for lazy ones,
/// where `base` is serialized with `base_group_ref`.
nlohmann::ordered_json cochain_to_json(const Cochain& c, const std::string& group_ref,
                                       const std::string& base_group_ref = "");

}  // namespace ngcat
