// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ngcat/category.hpp"
#include "ngcat/explicit_cocycles.hpp"
#include "ngcat/families.hpp"
#include "ngcat/invertibles.hpp"

using namespace ngcat;

namespace {

constexpr int N = 36;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const GnFamily& family(int n) {
  static const GnFamily f[3] = {build_Gn(1), build_Gn(2), build_Gn(3)};
  return f[n - 1];
}

struct Built {
  GTCategory cat;
  std::vector<SimpleObject> simple_objects;
};

const Built& category(int n, int l) {
  static std::vector<std::unique_ptr<Built>> cache(18);
  auto& slot = cache[(n - 1) * 6 + l];
  if (!slot) {
    GTCategory cat = gn_category(family(n), l, N);
    auto all = simples(cat);
    slot = std::make_unique<Built>(Built{std::move(cat), std::move(all)});
  }
  return *slot;
}

const SimpleObject& rho(const Built& b) {
  for (const auto& s : b.simple_objects)
    if (s.fpdim > 1) return s;
  throw CategoryError("no non-invertible simple");
}

int mod(long long a) { return static_cast<int>(((a % N) + N) % N); }

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. dω0 = 1 on S3^4, evaluated from the written-out coboundary.
Outcome criterion1() {
  const Cochain w0 = omega0(N);
  const auto& G = *w0.group();
  int checked = 0;
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      for (Elem c = 0; c < 6; ++c)
        for (Elem d = 0; d < 6; ++d) {
          ++checked;
          const long long v = w0.at(b, c, d) - w0.at(G.mul(a, b), c, d) + w0.at(a, G.mul(b, c), d) -
                              w0.at(a, b, G.mul(c, d)) + w0.at(a, b, c);
          if (mod(v) != 0) return fail("nonzero at a quadruple");
        }
  return {checked == 1296, std::to_string(checked) + " quadruples"};
}

// 2. ω0^l is a coboundary for l = 6 and for no l in 1..5.
Outcome criterion2() {
  const Cochain w0 = omega0(N);
  std::string pattern;
  bool ok = true;
  for (int l = 1; l <= 6; ++l) {
    const auto eta = solve_coboundary(w0.power(l));
    pattern += eta ? "1" : "0";
    ok = ok && eta.has_value() == (l == 6);
    if (eta && !coboundary(*eta).equals(w0.power(l))) return fail("solver returned a non-solution");
  }
  return {ok, "solvable pattern l=1..6: " + pattern};
}

// 3. Adaptedness on 24·24·4 triples and closed form = inf ω0 · dξ on 24³.
Outcome criterion3() {
  const Cochain w = adapted_omega(N);
  const Subgroup h = s4_cyclic_subgroup();
  int triples = 0;
  for (Elem a = 0; a < 24; ++a)
    for (Elem b = 0; b < 24; ++b)
      for (Elem c : h.members()) {
        ++triples;
        if (w.at(a, b, c) != 0) return fail("ω(g1,g2,h) != 1");
      }
  const Cochain inf = inflate(omega0(N), quotient_pi());
  const Cochain dxi = coboundary(f0_f_xi(N).xi);
  const Cochain closed = adapted_omega_closed_form(N);
  for (Elem a = 0; a < 24; ++a)
    for (Elem b = 0; b < 24; ++b)
      for (Elem c = 0; c < 24; ++c)
        if (closed.at(a, b, c) != mod(inf.at(a, b, c) + dxi.at(a, b, c))) return fail("closed form differs");
  return {triples == 2304, std::to_string(triples) + " adapted triples, 13824 closed-form triples"};
}

// 4. Simple objects and global dimension.
Outcome criterion4() {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < 6; ++l) {
      const Built& b = category(n, l);
      int invertible = 0, big = 0;
      long long global = 0;
      for (const auto& s : b.simple_objects) {
        global += static_cast<long long>(s.fpdim) * s.fpdim;
        if (s.fpdim == 1) ++invertible;
        if (s.fpdim == 1 << (n + 1)) ++big;
      }
      const bool ok = invertible == 1 << (2 * n + 1) && big == 1 &&
                      static_cast<int>(b.simple_objects.size()) == invertible + 1 && global == b.cat.G->order() &&
                      global == 3LL << (2 * n + 1);
      if (!ok) return fail("n=" + std::to_string(n) + " l=" + std::to_string(l));
      if (n == 1 && b.simple_objects.size() != 9) return fail("S4 case does not have 9 simples");
    }
  return {true, "18 categories"};
}

// 5. ω_{γ1} = df0 and the general multiplier formula agrees with the shortcut.
Outcome criterion5() {
  const Cochain w = adapted_omega(N);
  const Subgroup h = s4_cyclic_subgroup();
  const Elem g1 = s4_element(parse_cycles("(12)(34)"));
  const auto m = schur_multiplier(w, g1, h, MultiplierFormula::kGeneral);
  const Cochain df0 = coboundary(f0_f_xi(N).f0);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      if (m.cocycle.at(a, b) != df0.at(a, b)) return fail("ω_γ1 != df0");
  int cosets = 0;
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < 6; ++l) {
      const Built& b = category(n, l);
      for (Elem g : b.cat.cosets.reps) {
        ++cosets;
        const auto general = schur_multiplier(b.cat.omega, g, b.cat.H, MultiplierFormula::kGeneral);
        const auto shortcut = schur_multiplier(b.cat.omega, g, b.cat.H, MultiplierFormula::kAdaptedShortcut);
        if (!general.cocycle.equals(shortcut.cocycle)) return fail("shortcut differs at a coset");
      }
    }
  return {true, std::to_string(cosets) + " cosets"};
}

// 6. ν2(ρ) = (-1)^l, ν3(ρ) = 2^n e^{-2πil/3}.
Outcome criterion6() {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < 6; ++l) {
      const Built& b = category(n, l);
      const CycInt nu2 = fs_indicator(b.cat, rho(b), 2);
      const CycInt nu3 = fs_indicator(b.cat, rho(b), 3);
      // e^{-2πil/3} = ζ36^{-12l}
      const CycInt want3 = CycInt::from_integer(1LL << n) * CycInt::root_of_unity(-12LL * l);
      const CycInt want2 = CycInt::from_integer(l % 2 ? -1 : 1);
      if (!(nu2 == want2) || !(nu3 == want3)) {
        return fail("n=" + std::to_string(n) + " l=" + std::to_string(l) + ": " + nu2.to_string() + ", " +
                    nu3.to_string());
      }
    }
  return {true, "18 (n,l) pairs"};
}

// Reference extraspecial groups assembled here from D8 and Q8.
GroupPtr reference(int n, bool plus) {
  const GroupPtr d8 = dihedral8();
  GroupPtr g = plus ? d8 : quaternion8();
  auto z = [](const GroupPtr& x) {
    const Subgroup c = center(x);
    return c.members()[1];
  };
  for (int i = 1; i < n; ++i) g = central_product(*g, *d8, z(g), z(d8));
  return g;
}

// 7. Γ(𝒞_{n,l}) is extraspecial of the expected type.
Outcome criterion7() {
  for (int n = 1; n <= 3; ++n) {
    const GroupPtr plus_ref = reference(n, true);
    const GroupPtr minus_ref = reference(n, false);
    for (int l = 0; l < 6; ++l) {
      const Built& b = category(n, l);
      const bool plus = l % 2 == 0;
      const std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      for (int pass = 0; pass < 2; ++pass) {
        const TwistData t = pass == 0 ? compute_K(b.cat) : compute_K(b.cat, f0_power_eta(family(n), l, N));
        const auto ext = build_extension(t, dual_group(*t.H_group, N));
        const auto fp = fingerprint(ext.group);
        const int involutions = fp.order_statistics.count(2) ? fp.order_statistics.at(2) : 0;
        const int expected_involutions = (1 << (2 * n)) + (plus ? 1 : -1) * (1 << n) - 1;
        if (fp.order != 1 << (2 * n + 1) || !fp.is_extraspecial_2group) return fail(tag + ": not extraspecial");
        if (involutions != expected_involutions) return fail(tag + ": involution count");
        if (!isomorphic(ext.group, plus ? plus_ref : minus_ref)) return fail(tag + ": not isomorphic");
        if (isomorphic(ext.group, plus ? minus_ref : plus_ref)) return fail(tag + ": isomorphic to both types");
      }
    }
  }
  return {true, "18 groups, solver η and explicit η"};
}

// 8. (ν2(ρ), ν3(ρ)) pairwise distinct over l.
Outcome criterion8() {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<CycInt, CycInt>> seen;
    for (int l = 0; l < 6; ++l) {
      const Built& b = category(n, l);
      std::pair<CycInt, CycInt> v{fs_indicator(b.cat, rho(b), 2), fs_indicator(b.cat, rho(b), 3)};
      for (const auto& s : seen)
        if (s.first == v.first && s.second == v.second) return fail("repeat at n=" + std::to_string(n));
      seen.push_back(v);
    }
  }
  return {true, "6 distinct pairs for each n"};
}

// 9. Property suites.
Outcome criterion9() {
  std::mt19937_64 rng(9);
  for (const auto& g : {symmetric_group(3), symmetric_group(4)})
    for (int k = 0; k <= 2; ++k) {
      const Cochain c = Cochain::tabulate(g, k, N, [&](std::span<const Elem>) { return static_cast<long long>(rng() % N); });
      if (!coboundary(coboundary(c)).is_trivial()) return fail("d∘d != 1");
    }
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l < 6; ++l) {
      const Built& b = category(n, l);
      const std::string tag = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      const TwistData t = compute_K(b.cat);
      if (!nu_is_cocycle(t)) return fail(tag + ": ν cocycle");
      build_extension(t, dual_group(*t.H_group, N)).group->verify_axioms();
      for (const auto& s : b.simple_objects) {
        const auto m = schur_multiplier(b.cat.omega, s.rep, b.cat.H);
        const auto& sg = *s.stabilizer_group;
        for (Elem x = 0; x < sg.order(); ++x)
          for (Elem y = 0; y < sg.order(); ++y)
            if (mod(s.character.values[x] + s.character.values[y]) !=
                mod(m.cocycle.at(x, y) + s.character.values[sg.mul(x, y)])) {
              return fail(tag + ": projective character identity");
            }
      }
      const auto& G = *b.cat.G;
      for (Elem h : b.cat.H.members()) {
        const Elem r = G.mul(family(n).gamma2, h);
        long long acc = 0;
        for (int k = 1; k <= 12; ++k) {
          acc -= b.cat.omega.at(r, G.pow(G.inv(r), k), r);
          if (pi(r, -k, b.cat.omega) != mod(acc)) return fail(tag + ": π closed form");
        }
      }
    }
  return {true, "d∘d, ν cocycle, extension axioms, projective characters, π_{-k}"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cocycle verification on S3", 1.0, criterion1},
      {2, "cohomology order of omega0", 10.0, criterion2},
      {3, "adaptedness and closed form", 5.0, criterion3},
      {4, "simple objects and global dimension", 30.0, criterion4},
      {5, "Schur multiplier", 60.0, criterion5},
      {6, "Frobenius-Schur indicators", 60.0, criterion6},
      {7, "invertible groups", 120.0, criterion7},
      {8, "pairwise inequivalence witness", 60.0, criterion8},
      {9, "property suites", 120.0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.3fs) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
