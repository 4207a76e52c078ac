#pragma once

#include "ngcat/category.hpp"
#include "ngcat/invertibles.hpp"
#include "ngcat/standard_groups.hpp"

namespace ngcat {

/// 𝒞(G_n, ω_n^l, H_n, 1), with the elements of K_n and γ2 as double-coset
/// representatives.
GTCategory gn_category(const GnFamily& family, int l, int modulus = kDefaultModulus,
                       std::size_t samples = 1'000'000, std::uint64_t seed = 42);

/// η_k = (f0 ∘ p)^{l·r} for k = (0,w)γ1^r, as a chooser for compute_K.
/// `family` must outlive the chooser.
EtaChooser f0_power_eta(const GnFamily& family, int l, int modulus = kDefaultModulus);

}  // namespace ngcat
