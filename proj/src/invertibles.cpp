#include "ngcat/invertibles.hpp"

#include <algorithm>
#include <deque>

#include "ngcat/standard_groups.hpp"

namespace ngcat {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

Elem central_involution(const GroupPtr& g) {
  const Subgroup z = center(g);
  if (z.size() != 2) throw GroupError("expected a center of order 2");
  return z.members()[0] == g->identity() ? z.members()[1] : z.members()[0];
}

}  // namespace

Character TwistData::act(int s, const Character& psi) const {
  Character out;
  out.values.resize(psi.values.size());
  for (std::size_t h = 0; h < psi.values.size(); ++h) {
    out.values[h] = psi.values[static_cast<std::size_t>(conj[s][h])];
  }
  return out;
}

TwistData compute_K(const GTCategory& cat, const EtaChooser& chooser) {
  const FiniteGroup& G = *cat.G;
  const int n = cat.omega.modulus();
  TwistData t;
  t.modulus = n;
  t.H_group = induced_group(cat.H);
  if (!t.H_group->is_abelian()) throw UnsupportedConfiguration("twisted extension needs an abelian H");
  const Subgroup norm = normalizer(cat.G, cat.H);
  const int hsize = cat.H.size();
  const int unit_coset = cat.cosets.coset_of(G.identity());

  std::vector<int> coset_to_k(cat.cosets.reps.size(), -1);
  auto add = [&](int coset, Elem s, Cochain eta) {
    coset_to_k[coset] = static_cast<int>(t.K.size());
    t.K.push_back(s);
    t.K_labels.push_back(G.label(s));
    t.eta.push_back(std::move(eta));
  };
  add(unit_coset, G.identity(), Cochain(t.H_group, 1, n));

  for (std::size_t i = 0; i < cat.cosets.reps.size(); ++i) {
    const Elem g = cat.cosets.reps[i];
    if (static_cast<int>(i) == unit_coset || !norm.contains(g)) continue;
    const SchurMultiplier m = schur_multiplier(cat.omega, g, cat.H);
    const Cochain omega_g =
        Cochain::tabulate(t.H_group, 2, n, [&](std::span<const Elem> a) { return m.cocycle(a); });
    std::optional<Cochain> eta = chooser ? chooser(g, omega_g) : solve_coboundary(omega_g);
    if (!eta) continue;
    if (eta->group()->order() != hsize || eta->degree() != 1 || !coboundary(*eta).equals(omega_g)) {
      throw CategoryError("η does not solve dη = ω_g at " + G.label(g));
    }
    add(static_cast<int>(i), g, std::move(*eta));
  }

  const std::size_t k = t.K.size();
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<int> row(hsize);
    for (int h = 0; h < hsize; ++h) row[h] = cat.H.position(G.conj(cat.H.members()[h], t.K[s]));
    t.conj.push_back(std::move(row));
  }
  t.law.assign(k, std::vector<int>(k, -1));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const int c = coset_to_k[cat.cosets.coset_of(G.mul(t.K[a], t.K[b]))];
      if (c < 0) throw CategoryError("K is not closed under multiplication");
      t.law[a][b] = c;
    }
  }
  t.nu.assign(k, std::vector<Character>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Character& c = t.nu[a][b];
      c.values.resize(hsize);
      for (int h = 0; h < hsize; ++h) {
        c.values[h] = mod(static_cast<long long>(t.eta[a].at(h)) + t.eta[b].at(t.conj[a][h]) -
                              t.eta[t.law[a][b]].at(h),
                          n);
      }
      if (!is_homomorphism(*t.H_group, c, n)) {
        throw CategoryError("ν(" + t.K_labels[a] + "," + t.K_labels[b] + ") is not a character");
      }
    }
  }
  return t;
}

bool nu_is_cocycle(const TwistData& t) {
  const std::size_t k = t.K.size();
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t u = 0; u < k; ++u) {
        const Character lhs = char_mul(t.act(static_cast<int>(s), t.nu[a][u]), t.nu[s][t.law[a][u]], t.modulus);
        const Character rhs = char_mul(t.nu[s][a], t.nu[t.law[s][a]][u], t.modulus);
        if (lhs != rhs) return false;
      }
  return true;
}

ExtensionGroup build_extension(const TwistData& t, const std::vector<Character>& h_dual) {
  const int hd = static_cast<int>(h_dual.size());
  const int k = static_cast<int>(t.K.size());
  const int order = hd * k;
  if (order > kMaxGroupOrder) throw GroupError("extension exceeds the supported order");
  std::map<Character, int> index;
  for (int i = 0; i < hd; ++i) index.emplace(h_dual[i], i);
  auto lookup = [&](const Character& c) {
    const auto it = index.find(c);
    if (it == index.end()) throw CategoryError("character outside the supplied dual group");
    return it->second;
  };
  std::vector<std::vector<int>> acted(k, std::vector<int>(hd));
  for (int s = 0; s < k; ++s)
    for (int j = 0; j < hd; ++j) acted[s][j] = lookup(t.act(s, h_dual[j]));

  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  ExtensionGroup out;
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    const int s = x / hd;
    const int chi = x % hd;
    out.labels.emplace_back(chi, s);
    labels.push_back("(χ" + std::to_string(chi) + "," + t.K_labels[s] + ")");
    for (int y = 0; y < order; ++y) {
      const int u = y / hd;
      const int psi = y % hd;
      const Character c =
          char_mul(char_mul(t.nu[s][u], h_dual[chi], t.modulus), h_dual[acted[s][psi]], t.modulus);
      table[static_cast<std::size_t>(x) * order + y] = t.law[s][u] * hd + lookup(c);
    }
  }
  out.group = std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels));
  out.group->verify_axioms();
  return out;
}

GroupPtr central_product(const FiniteGroup& a, const FiniteGroup& b, Elem za, Elem zb) {
  auto check = [](const FiniteGroup& g, Elem z) {
    if (g.element_order(z) != 2) throw GroupError("central product needs elements of order 2");
    for (Elem x = 0; x < g.order(); ++x) {
      if (g.mul(x, z) != g.mul(z, x)) throw GroupError("central product needs central elements");
    }
  };
  check(a, za);
  check(b, zb);
  GroupPtr p = direct_product(a, b);
  const Elem e = a.identity() * b.order() + b.identity();
  const Elem z = za * b.order() + zb;
  Subgroup n(p, {std::min(e, z), std::max(e, z)});
  return quotient_group(n).first;
}

GroupFingerprint fingerprint(const GroupPtr& g) {
  GroupFingerprint f;
  f.order = g->order();
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  f.center_order = z.size();
  f.derived_order = d.size();
  f.exponent = exponent(*g);
  f.order_statistics = order_statistics(*g);
  int log2 = 0;
  while ((1 << log2) < f.order) ++log2;
  f.is_extraspecial_2group = (1 << log2) == f.order && log2 % 2 == 1 && log2 >= 3 && z.size() == 2 && z == d;
  return f;
}

bool isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() > kMaxGroupOrder || b->order() > kMaxGroupOrder) {
    throw GroupError("isomorphism test limited to order " + std::to_string(kMaxGroupOrder));
  }
  if (!(fingerprint(a) == fingerprint(b))) return false;
  const int n = a->order();

  auto centralizer_sizes = [](const GroupPtr& g) {
    std::vector<int> out(g->order());
    for (Elem x = 0; x < g->order(); ++x) out[x] = centralizer(g, x).size();
    return out;
  };
  const auto ca = centralizer_sizes(a);
  const auto cb = centralizer_sizes(b);

  // Greedy generating set, largest element orders first.
  std::vector<Elem> by_order(n);
  for (Elem x = 0; x < n; ++x) by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem x, Elem y) { return a->element_order(x) > a->element_order(y); });
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(a);
  for (Elem x : by_order) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_generated(a, gens);
    if (span.size() == n) break;
  }

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem y = 0; y < n; ++y) {
      if (b->element_order(y) == a->element_order(gens[i]) && cb[y] == ca[gens[i]]) candidates[i].push_back(y);
    }
  }

  std::vector<Elem> images(gens.size());
  // Extends the assignment on gens[0..count) to the subgroup they generate;
  // false on any inconsistency or collision.
  auto consistent = [&](std::size_t count) {
    std::vector<Elem> phi(n, -1);
    std::vector<char> used(n, 0);
    phi[a->identity()] = b->identity();
    used[b->identity()] = 1;
    std::deque<Elem> queue{a->identity()};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < count; ++i) {
        const Elem xa = a->mul(x, gens[i]);
        const Elem yb = b->mul(phi[x], images[i]);
        if (phi[xa] >= 0) {
          if (phi[xa] != yb) return false;
          continue;
        }
        if (used[yb]) return false;
        phi[xa] = yb;
        used[yb] = 1;
        queue.push_back(xa);
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return true;
    for (Elem y : candidates[i]) {
      images[i] = y;
      if (consistent(i + 1) && search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

GroupPtr extraspecial_reference(int n, bool plus) {
  if (n < 1) throw GroupError("extraspecial reference needs n >= 1");
  GroupPtr g = plus ? dihedral8() : quaternion8();
  const GroupPtr d8 = dihedral8();
  for (int i = 1; i < n; ++i) g = central_product(*g, *d8, central_involution(g), central_involution(d8));
  return g;
}

std::string extraspecial_name(int n, bool plus) {
  const std::string head = plus ? "D8" : "Q8";
  if (n == 1) return head;
  if (plus) return "D8^{∘" + std::to_string(n) + "}";
  if (n == 2) return "Q8∘D8";
  return "Q8∘D8^{∘" + std::to_string(n - 1) + "}";
}

}  // namespace ngcat
