#include "ngcat/families.hpp"

#include "ngcat/explicit_cocycles.hpp"

namespace ngcat {

GTCategory gn_category(const GnFamily& family, int l, int modulus, std::size_t samples, std::uint64_t seed) {
  std::vector<Elem> reps = family.K.members();
  reps.push_back(family.gamma2);
  return build_category(family.group, family.H, omega_n(family, modulus).power(l), l, samples, seed, reps);
}

EtaChooser f0_power_eta(const GnFamily& family, int l, int modulus) {
  const Cochain f0 = f0_f_xi(modulus).f0;
  const Subgroup h = s4_cyclic_subgroup();
  return [&family, l, modulus, f0, h](Elem k, const Cochain& omega_k) -> std::optional<Cochain> {
    const long long r = family.p(k) == family.p(family.gamma1) ? 1 : 0;
    return Cochain::tabulate(omega_k.group(), 1, modulus, [&](std::span<const Elem> a) {
      return l * r * f0.at(h.position(family.p(family.H.members()[a[0]])));
    });
  };
}

}  // namespace ngcat
