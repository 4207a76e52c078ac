#include "ngcat/explicit_cocycles.hpp"

namespace ngcat {

namespace {

void require_divides(int d, int modulus, const char* what) {
  if (modulus % d != 0) {
    throw CochainError(std::string(what) + " needs " + std::to_string(d) + " | N, got N=" + std::to_string(modulus));
  }
}

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

int sign_exponent(long long parity, int modulus) { return floor_mod(parity, 2) == 1 ? modulus / 2 : 0; }

int f0_exponent(int z, int modulus) { return z >= 2 ? modulus / 2 : 0; }

int f_exponent(Elem g, int modulus) {
  const auto [x, y, z] = s4_normal_form(g);
  return (f0_exponent(z, modulus) + sign_exponent(static_cast<long long>(y) * (z % 2), modulus)) % modulus;
}

}  // namespace

int alpha_exponent(long long x1, long long x2, long long x3, int modulus) {
  require_divides(9, modulus, "alpha");
  const long long s = x1 + x2;
  const long long carry = s - floor_mod(s, 3);
  return static_cast<int>((modulus / 9) * floor_mod(carry * x3, 9));
}

Cochain omega0(int modulus) {
  require_divides(18, modulus, "omega0");
  return Cochain::tabulate(symmetric_group(3), 3, modulus, [modulus](std::span<const Elem> a) -> long long {
    const int x1 = a[0] / 2, y1 = a[0] % 2;
    const int x2 = a[1] / 2, y2 = a[1] % 2;
    const int x3 = a[2] / 2, y3 = a[2] % 2;
    const long long s1 = y1 ? -1 : 1;
    const long long s12 = (y1 + y2) % 2 ? -1 : 1;
    return alpha_exponent(x1, s1 * x2, s12 * x3, modulus) + sign_exponent(y1 * y2 * y3, modulus);
  });
}

Subgroup s4_cyclic_subgroup() {
  const GroupPtr s4 = symmetric_group(4);
  const Elem c = s4_element(0, 0, 1);
  return Subgroup(s4, {s4_element(0, 0, 0), c, s4_element(0, 0, 2), s4_element(0, 0, 3)},
                  CyclicCertificate{{c, 4}});
}

SignCochains f0_f_xi(int modulus) {
  require_divides(2, modulus, "f0/f/xi");
  const GroupPtr s4 = symmetric_group(4);
  const Subgroup h = s4_cyclic_subgroup();
  const GroupPtr hg = induced_group(h);
  Cochain f0 = Cochain::tabulate(hg, 1, modulus, [&](std::span<const Elem> a) {
    return f0_exponent(s4_normal_form(h.members()[a[0]]).z, modulus);
  });
  Cochain f = Cochain::tabulate(s4, 1, modulus, [&](std::span<const Elem> a) { return f_exponent(a[0], modulus); });
  Cochain xi = Cochain::tabulate(s4, 2, modulus, [&](std::span<const Elem> a) {
    return epsilon_s4(a[0]) == 1 ? f_exponent(a[1], modulus) : 0;
  });
  return SignCochains{std::move(f0), std::move(f), std::move(xi)};
}

Cochain adapted_omega(int modulus) {
  const Cochain inf = inflate(omega0(modulus), quotient_pi());
  const Cochain dxi = coboundary(f0_f_xi(modulus).xi);
  return inf.materialize() + dxi;
}

Cochain adapted_omega_closed_form(int modulus) {
  require_divides(18, modulus, "adapted omega");
  const GroupPtr s4 = symmetric_group(4);
  return Cochain::tabulate(s4, 3, modulus, [&](std::span<const Elem> a) -> long long {
    const auto [x1, y1, z1] = s4_normal_form(a[0]);
    const auto [x2, y2, z2] = s4_normal_form(a[1]);
    const auto [x3, y3, z3] = s4_normal_form(a[2]);
    const long long s1 = (y1 + z1) % 2 ? -1 : 1;
    const long long s12 = (y1 + y2 + z1 + z2) % 2 ? -1 : 1;
    long long e = alpha_exponent(x1, s1 * x2, s12 * x3, modulus);
    if (epsilon_s4(a[0]) == 1) {
      const Elem sigma3 = s4_element(x3, y3, 0);
      e += f_exponent(s4->mul(a[1], sigma3), modulus) + f_exponent(a[1], modulus) +
           sign_exponent(epsilon_s4(a[1]) * epsilon_s4(sigma3), modulus);
    }
    return e;
  });
}

Cochain omega_n(const GnFamily& family, int modulus) {
  return Cochain::pullback(adapted_omega(modulus), family.p);
}

}  // namespace ngcat
