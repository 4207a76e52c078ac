#include "ngcat/category.hpp"

#include <limits>

namespace ngcat {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

GTCategory build_category(GroupPtr G, Subgroup H, Cochain omega, int l, std::size_t samples, std::uint64_t seed,
                          std::span<const Elem> preferred_reps) {
  if (H.parent() != G || omega.group() != G) throw CategoryError("category data live on different groups");
  if (omega.degree() != 3) throw CategoryError("associator must be a 3-cochain");
  const std::size_t limit = G->order() <= 24 ? std::numeric_limits<std::size_t>::max() : 0;
  check_adapted(omega, H, samples, seed, limit);
  DoubleCosetDecomposition dc = double_cosets(G, H, preferred_reps);
  return GTCategory{std::move(G), std::move(H), std::move(omega), l, std::move(dc)};
}

std::vector<SimpleObject> simples(const GTCategory& cat) {
  std::vector<SimpleObject> out;
  const int n = cat.omega.modulus();
  for (std::size_t i = 0; i < cat.cosets.reps.size(); ++i) {
    const Elem g = cat.cosets.reps[i];
    const int fpdim = static_cast<int>(cat.cosets.cosets[i].size()) / cat.H.size();
    const std::string where = "coset of " + cat.G->label(g);
    SchurMultiplier m = schur_multiplier(cat.omega, g, cat.H);
    if (m.stabilizer.size() == 1) {
      out.push_back({static_cast<int>(i), g, m.stabilizer, m.stabilizer_group, Character{{0}}, fpdim});
      continue;
    }
    if (!m.stabilizer_group->is_abelian()) throw UnsupportedConfiguration("nonabelian stabilizer at " + where);
    if (!m.stabilizer_group->cyclic_cert()) {
      throw UnsupportedConfiguration("stabilizer without cyclic decomposition at " + where);
    }
    const auto eta = solve_coboundary(m.cocycle);
    if (!eta) throw UnsupportedConfiguration("cohomologically nontrivial multiplier at " + where);
    Character base;
    for (Elem h = 0; h < m.stabilizer_group->order(); ++h) base.values.push_back(eta->at(h));
    for (const Character& tau : dual_group(*m.stabilizer_group, n)) {
      out.push_back({static_cast<int>(i), g, m.stabilizer, m.stabilizer_group, char_mul(tau, base, n), fpdim});
    }
  }
  return out;
}

NearGroupSummary near_group_check(const GTCategory& cat, const std::vector<SimpleObject>& simple_objects) {
  long long global = 0;
  int invertible = 0;
  std::vector<const SimpleObject*> others;
  for (const auto& s : simple_objects) {
    global += static_cast<long long>(s.fpdim) * s.fpdim;
    if (s.fpdim == 1) {
      ++invertible;
    } else {
      others.push_back(&s);
    }
  }
  if (global != cat.G->order()) {
    throw CategoryError("global dimension " + std::to_string(global) + " differs from |G| = " +
                        std::to_string(cat.G->order()));
  }
  if (others.size() != 1) {
    throw NotNearGroup(std::to_string(others.size()) + " non-invertible simple objects");
  }
  const int d = others.front()->fpdim;
  const long long excess = static_cast<long long>(d) * d - invertible;
  if (excess < 0 || excess % d != 0) throw NotNearGroup("ρ² has no integral multiplicity of ρ");
  return NearGroupSummary{invertible, *others.front(), d, static_cast<int>(excess / d)};
}

int pi(Elem x, long long k, const Cochain& omega) {
  const FiniteGroup& G = *omega.group();
  const int n = omega.modulus();
  long long acc = 0;
  if (k >= 0) {
    Elem xj = G.identity();
    for (long long j = 0; j < k; ++j) {
      acc += omega.at(x, xj, x);
      xj = G.mul(xj, x);
    }
  } else {
    const Elem xinv = G.inv(x);
    Elem xj = xinv;
    for (long long j = -1; j >= k; --j) {
      acc -= omega.at(x, xj, x);
      xj = G.mul(xj, xinv);
    }
  }
  return mod(acc, n);
}

CycInt fs_indicator(const GTCategory& cat, const SimpleObject& s, int k) {
  if (k < 1) throw CategoryError("indicator degree must be positive");
  const FiniteGroup& G = *cat.G;
  const int n = cat.omega.modulus();
  CycInt sum(n);
  for (Elem h : cat.H.members()) {
    const Elem r = G.mul(s.rep, h);
    const Elem rk = G.pow(r, k);
    if (!s.stabilizer.contains(rk)) continue;
    const int chi = s.character.values[s.stabilizer.position(G.inv(rk))];
    sum += CycInt::root_of_unity(static_cast<long long>(pi(r, -k, cat.omega)) + chi, n);
  }
  CycInt out = sum.divided_by(s.stabilizer.size());
  if (!out.is_integral()) {
    throw CategoryError("indicator sum not divisible by |H^g| at " + G.label(s.rep));
  }
  return out;
}

}  // namespace ngcat
