#pragma once

#include "ngcat/cochain.hpp"
#include "ngcat/cyclotomic.hpp"
#include "ngcat/standard_groups.hpp"

namespace ngcat {

/// Exponent mod N of α(x1,x2,x3) = exp(2πi (x1+x2-[x1+x2]_3) x3 / 9), with α
/// defined on all of Z^3 (negative arguments allowed).
int alpha_exponent(long long x1, long long x2, long long x3, int modulus);

/// The S_3 3-cocycle
/// ω0((x1,y1),(x2,y2),(x3,y3)) = α(x1, (-1)^{y1} x2, (-1)^{y1+y2} x3) (-1)^{y1 y2 y3}.
Cochain omega0(int modulus = kDefaultModulus);

/// H = <(1234)> inside symmetric_group(4), certified as Z_4.
Subgroup s4_cyclic_subgroup();

struct SignCochains {
  Cochain f0;  // degree 1 on induced_group(H): (1234)^z ↦ +1 for z∈{0,1}, -1 for z∈{2,3}
  Cochain f;   // degree 1 on S_4: f(σh) = f0(h)(-1)^{ε(σ)ε(h)}
  Cochain xi;  // degree 2 on S_4: ξ(g1,g2) = f(g2)^{ε(g1)}
};

SignCochains f0_f_xi(int modulus = kDefaultModulus);

/// ω = inf(ω0) · dξ on S_4, dense.
Cochain adapted_omega(int modulus = kDefaultModulus);
/// The same cocycle from its closed normal-form expression
/// α(x1,(-1)^{y1+z1}x2,(-1)^{y1+y2+z1+z2}x3)·(f(g2σ3)f(g2)(-1)^{ε(g2)ε(σ3)})^{ε(g1)}.
Cochain adapted_omega_closed_form(int modulus = kDefaultModulus);

/// ω_n = ω ∘ p on G_n, lazy.
Cochain omega_n(const GnFamily& family, int modulus = kDefaultModulus);

}  // namespace ngcat
