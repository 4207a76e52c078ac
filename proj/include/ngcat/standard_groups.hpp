#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ngcat/group.hpp"

namespace ngcat {

/// Permutation of {1,2,3,4} stored 0-based: p[i] is the image of i.
/// Products compose right to left, (στ)(i) = σ(τ(i)).
using Permutation = std::array<int, 4>;

Permutation compose(const Permutation& a, const Permutation& b);
/// Canonical cycle notation, "e" for the identity, e.g. "(12)(34)".
std::string cycle_notation(const Permutation& p);
/// Parses cycle notation such as "(1342)" or "(12)(34)".
Permutation parse_cycles(const std::string& text);

/// S_3 (n=3) or S_4 (n=4).  S_3 elements are indexed by the normal form
/// (123)^x(13)^y as 2x+y; S_4 elements by (123)^x(13)^y(1234)^z as
/// 4(2x+y)+z.  Labels are cycle notation.
GroupPtr symmetric_group(int n);

struct S4NormalForm {
  int x;  // 0..2
  int y;  // 0..1
  int z;  // 0..3

  bool operator==(const S4NormalForm&) const = default;
};

S4NormalForm s4_normal_form(Elem g);
Elem s4_element(int x, int y, int z);
Elem s4_element(const Permutation& p);
Permutation s4_permutation(Elem g);
/// Index of the S_3 element (123)^x(13)^y.
inline Elem s3_element(int x, int y) { return static_cast<Elem>(2 * x + y); }

/// Parity of an S_4 element: sgn(g) = (-1)^epsilon.
int epsilon_s4(Elem g);

/// The quotient S_4 → S_4/N ≅ S_3 with N the Klein four-group, computed from
/// cosets of N (not from the normal-form shortcut).
GroupHom quotient_pi();
/// The inclusion S_3 → S_4 fixing the point 4.
GroupHom s3_into_s4();

/// G_n = (V ⊕ V) ⋊ S_4 with V = F_2^{n-1}, S_4 acting through S_3.
///
/// Elements are indexed lexicographically by (v, w, g):
/// index = ((v << (n-1)) | w) * 24 + g, with g the S_4 index.
struct GnFamily {
  int n = 1;
  GroupPtr group;
  GroupPtr s4;
  GroupHom p;        // projection onto S_4
  GroupHom s4_incl;  // g ↦ ((0,0), g)
  Subgroup H;        // (V ⊕ 0)·<(1234)>, certified Z_2^{n-1} × Z_4
  Subgroup K;        // (0 ⊕ V)·{e, γ1}
  Elem gamma0 = 0;
  Elem gamma1 = 0;  // (12)(34)
  Elem gamma2 = 0;  // (123)

  int dim() const { return n - 1; }
  Elem element(std::uint32_t v, std::uint32_t w, Elem g) const;
  struct Parts {
    std::uint32_t v;
    std::uint32_t w;
    Elem g;
  };
  Parts parts(Elem x) const;
};

GnFamily build_Gn(int n);

/// epsilon ∘ p.
int epsilon(const GnFamily& family, Elem x);

/// Z_m with a one-factor certificate; element k is the k-th power of 1.
GroupPtr cyclic_group(int m);
/// <r, s | r^4, s^2 = r^{2t}, s r = r^{-1} s>; t=0 gives D_8, t=1 gives Q_8.
/// Element index 2a+b stands for r^a s^b.
GroupPtr dihedral8();
GroupPtr quaternion8();

}  // namespace ngcat
