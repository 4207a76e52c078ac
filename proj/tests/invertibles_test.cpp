#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "ngcat/explicit_cocycles.hpp"
#include "ngcat/families.hpp"
#include "ngcat/invertibles.hpp"

namespace ngcat {
namespace {

constexpr int N = 36;

const GnFamily& family(int n) {
  static const GnFamily f[3] = {build_Gn(1), build_Gn(2), build_Gn(3)};
  return f[n - 1];
}

Elem s4(const char* cycles) { return s4_element(parse_cycles(cycles)); }

Character char_pow(const Character& c, int e) {
  Character out = c;
  for (auto& v : out.values) v = static_cast<int>((static_cast<long long>(v) * e % N + N) % N);
  return out;
}

// η_k = (f0∘p)^{l·r} for k = (0,w)γ1^r.
EtaChooser explicit_eta(const GnFamily& f, int l) {
  return [&f, l](Elem k, const Cochain& omega_k) -> std::optional<Cochain> {
    const int r = f.p(k) == s4("(12)(34)") ? 1 : 0;
    const auto sc = f0_f_xi(N);
    const Subgroup hs4 = s4_cyclic_subgroup();
    return Cochain::tabulate(omega_k.group(), 1, N, [&](std::span<const Elem> a) {
      return static_cast<long long>(l) * r * sc.f0.at(hs4.position(f.p(f.H.members()[a[0]])));
    });
  };
}

// Oracle: involution count of the extraspecial group of order 2^{2n+1}.
int involutions(int n, bool plus) { return (1 << (2 * n)) + (plus ? 1 : -1) * (1 << n) - 1; }

TEST(Reference, D8AndQ8) {
  const auto d8 = dihedral8();
  const auto q8 = quaternion8();
  const auto fd = fingerprint(d8);
  const auto fq = fingerprint(q8);
  EXPECT_TRUE(fd.is_extraspecial_2group);
  EXPECT_TRUE(fq.is_extraspecial_2group);
  EXPECT_EQ(fd.order_statistics.at(2), 5);
  EXPECT_EQ(fq.order_statistics.at(2), 1);
  EXPECT_FALSE(fingerprint(cyclic_group(4)).is_extraspecial_2group);
  EXPECT_FALSE(fingerprint(cyclic_group(2)).is_extraspecial_2group);
  EXPECT_FALSE(isomorphic(d8, q8));
  EXPECT_TRUE(isomorphic(d8, d8));
}

TEST(Reference, D8AsSemidirectProduct) {
  // Z4 ⋊ Z2 with s r s = r^{-1}: element 4b + a is r^a s^b.
  std::vector<Elem> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int a1 = x % 4, b1 = x / 4, a2 = y % 4, b2 = y / 4;
      const int a = (a1 + (b1 ? -a2 : a2) + 4) % 4;
      table[x * 8 + y] = 4 * ((b1 + b2) % 2) + a;
    }
  const auto semi = std::make_shared<FiniteGroup>(8, table);
  EXPECT_TRUE(isomorphic(semi, dihedral8()));
  EXPECT_FALSE(isomorphic(semi, quaternion8()));
}

TEST(CentralProduct, SmallCases) {
  const auto d8 = dihedral8();
  const auto q8 = quaternion8();
  const Elem zd = center(d8).members()[1];
  const Elem zq = center(q8).members()[1];
  const auto dd = central_product(*d8, *d8, zd, zd);
  const auto qd = central_product(*q8, *d8, zq, zd);
  EXPECT_EQ(dd->order(), 32);
  EXPECT_EQ(center(dd).size(), 2);
  EXPECT_EQ(qd->order(), 32);
  EXPECT_EQ(order_statistics(*dd).at(2), involutions(2, true));
  EXPECT_EQ(order_statistics(*qd).at(2), involutions(2, false));
  EXPECT_FALSE(isomorphic(dd, qd));
  // Q8∘Q8 ≅ D8∘D8
  EXPECT_TRUE(isomorphic(central_product(*q8, *q8, zq, zq), dd));

  const auto z2 = cyclic_group(2);
  EXPECT_TRUE(isomorphic(central_product(*d8, *z2, zd, 1), d8));
  EXPECT_THROW(central_product(*d8, *d8, 1, zd), GroupError);
  EXPECT_THROW(central_product(*d8, *z2, 0, 1), GroupError);
}

TEST(Fingerprint, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (const auto& g : {dihedral8(), quaternion8(), extraspecial_reference(2, true), symmetric_group(4)}) {
    const int n = g->order();
    std::vector<Elem> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      std::vector<Elem> inv(n);
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      std::vector<Elem> table(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[perm[x] * n + perm[y]] = perm[g->mul(x, y)];
      const auto h = std::make_shared<FiniteGroup>(n, table);
      EXPECT_EQ(fingerprint(h), fingerprint(g));
      EXPECT_TRUE(isomorphic(g, h));
    }
  }
}

TEST(ComputeK, S4Case) {
  const auto& f = family(1);
  for (int l = 0; l < 6; ++l) {
    const GTCategory cat = gn_category(f, l, N);
    const TwistData t = compute_K(cat);
    ASSERT_EQ(t.K.size(), 2U);
    EXPECT_EQ(t.K[0], s4("e"));
    EXPECT_EQ(t.K[1], s4("(12)(34)"));
    EXPECT_TRUE(t.eta[0].is_trivial());
    const auto chi = dual_group(*t.H_group, N)[1];
    EXPECT_EQ(t.nu[1][1], char_pow(chi, 2 * l));
    EXPECT_EQ(t.law[1][1], 0);
    EXPECT_TRUE(nu_is_cocycle(t));

    const TwistData te = compute_K(cat, explicit_eta(f, l));
    EXPECT_EQ(te.nu[1][1], char_pow(chi, 2 * l));
    // ν(γ1,γ1)(h) = f0(h) f0(h^{-1})^l
    const auto sc = f0_f_xi(N);
    for (Elem h = 0; h < 4; ++h)
      EXPECT_EQ(te.nu[1][1].values[h], l * (sc.f0.at(h) + sc.f0.at(t.H_group->inv(h))) % N);
  }
}

TEST(ComputeK, ExplicitEtaGivesSignNu) {
  for (int n = 1; n <= 3; ++n) {
    const auto& f = family(n);
    for (int l : {0, 1, 3}) {
      const GTCategory cat = gn_category(f, l, N, 100'000, 1);
      const TwistData t = compute_K(cat, explicit_eta(f, l));
      ASSERT_EQ(t.K.size(), 1U << n);
      const auto chi = dual_group(*t.H_group, N)[1];
      for (std::size_t a = 0; a < t.K.size(); ++a)
        for (std::size_t b = 0; b < t.K.size(); ++b) {
          const bool both = f.p(t.K[a]) == f.p(f.gamma1) && f.p(t.K[b]) == f.p(f.gamma1);
          EXPECT_EQ(t.nu[a][b], both ? char_pow(chi, 2 * l) : char_trivial(*t.H_group));
        }
      EXPECT_TRUE(nu_is_cocycle(t));
    }
  }
}

TEST(ComputeK, RejectsWrongEta) {
  const GTCategory cat = gn_category(family(1), 1, N);
  EtaChooser wrong = [](Elem, const Cochain& w) { return std::optional<Cochain>(Cochain(w.group(), 1, N)); };
  EXPECT_THROW(compute_K(cat, wrong), CategoryError);
  EtaChooser none = [](Elem, const Cochain&) { return std::optional<Cochain>(); };
  EXPECT_EQ(compute_K(cat, none).K.size(), 1U);
}

TEST(Extension, StructureForSmallN) {
  for (int n = 1; n <= 2; ++n) {
    const auto& f = family(n);
    for (int l = 0; l < 6; ++l) {
      const GTCategory cat = gn_category(f, l, N, 100'000, 1);
      const TwistData t = compute_K(cat);
      EXPECT_TRUE(nu_is_cocycle(t));
      const auto dual = dual_group(*t.H_group, N);
      const ExtensionGroup ext = build_extension(t, dual);
      const auto& g = *ext.group;
      ASSERT_EQ(g.order(), 1 << (2 * n + 1));
      EXPECT_EQ(g.identity(), 0);

      // {(τ, e)} is a copy of Ĥ
      for (int a = 0; a < static_cast<int>(dual.size()); ++a)
        for (int b = 0; b < static_cast<int>(dual.size()); ++b) {
          const Elem c = g.mul(a, b);
          ASSERT_EQ(ext.labels[c].second, 0);
          EXPECT_EQ(dual[ext.labels[c].first], char_mul(dual[a], dual[b], N));
        }

      const bool plus = l % 2 == 0;
      const auto fp = fingerprint(ext.group);
      EXPECT_TRUE(fp.is_extraspecial_2group);
      EXPECT_EQ(fp.order_statistics.at(2), involutions(n, plus)) << n << "," << l;
      EXPECT_TRUE(isomorphic(ext.group, extraspecial_reference(n, plus)));
      EXPECT_FALSE(isomorphic(ext.group, extraspecial_reference(n, !plus)));

      // c = χ² is the central involution and the commutator of μ_i with f_i.
      const Elem c = 2;
      EXPECT_EQ(center(ext.group).members(), (std::vector<Elem>{0, c}));
      for (int i = 0; i < f.dim(); ++i) {
        const Elem mu = 4 << i;
        const auto kit = std::find(t.K.begin(), t.K.end(), f.element(0, 1U << i, 0));
        ASSERT_NE(kit, t.K.end());
        const Elem fi = static_cast<Elem>(kit - t.K.begin()) * static_cast<Elem>(dual.size());
        EXPECT_EQ(g.mul(fi, mu), g.mul(c, g.mul(mu, fi)));
      }
    }
  }
}

TEST(Extension, ExplicitEtaGivesIsomorphicGroup) {
  const auto& f = family(2);
  for (int l : {0, 1}) {
    const GTCategory cat = gn_category(f, l, N, 100'000, 1);
    const TwistData a = compute_K(cat);
    const TwistData b = compute_K(cat, explicit_eta(f, l));
    const auto dual = dual_group(*a.H_group, N);
    EXPECT_TRUE(isomorphic(build_extension(a, dual).group, build_extension(b, dual).group));
  }
}

TEST(Names, Extraspecial) {
  EXPECT_EQ(extraspecial_name(1, true), "D8");
  EXPECT_EQ(extraspecial_name(1, false), "Q8");
  EXPECT_EQ(extraspecial_name(3, true), "D8^{∘3}");
  EXPECT_EQ(extraspecial_name(3, false), "Q8∘D8^{∘2}");
  EXPECT_EQ(extraspecial_reference(3, false)->order(), 128);
}

}  // namespace
}  // namespace ngcat
