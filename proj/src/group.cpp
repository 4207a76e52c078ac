#include "ngcat/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace ngcat {

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Elem> table, std::vector<std::string> labels,
                         std::optional<CyclicCertificate> cert)
    : order_(order), mul_(std::move(table)), labels_(std::move(labels)), cert_(std::move(cert)) {
  if (order_ < 1 || order_ > kMaxGroupOrder) {
    throw GroupError("group order " + std::to_string(order_) + " outside 1.." +
                     std::to_string(kMaxGroupOrder));
  }
  const auto n = static_cast<std::size_t>(order_);
  if (mul_.size() != n * n) throw GroupError("multiplication table has wrong size");
  if (!labels_.empty() && labels_.size() != n) throw GroupError("label count mismatch");
  for (Elem v : mul_) {
    if (v < 0 || v >= order_) throw GroupError("multiplication table entry out of range");
  }

  identity_ = -1;
  for (Elem e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (Elem a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw GroupError("no two-sided identity");

  inv_.assign(n, -1);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) throw GroupError("inverse is not two-sided");
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw GroupError("element without inverse");
  }

  elem_order_.assign(n, 0);
  for (Elem a = 0; a < order_; ++a) {
    Elem x = a;
    int k = 1;
    while (x != identity_) {
      x = mul(x, a);
      if (++k > order_) throw GroupError("element of infinite order: table is not a group");
    }
    elem_order_[a] = k;
  }

  if (cert_) verify_certificate();
}

void FiniteGroup::verify_certificate() const {
  if (!is_abelian()) throw GroupError("cyclic certificate on a nonabelian group");
  long long prod = 1;
  for (const auto& f : *cert_) {
    if (f.generator < 0 || f.generator >= order_) throw GroupError("certificate generator out of range");
    if (element_order(f.generator) != f.order) throw GroupError("certificate order mismatch");
    prod *= f.order;
  }
  if (prod != order_) throw GroupError("certificate orders do not multiply to the group order");
  std::vector<char> seen(static_cast<std::size_t>(order_), 0);
  std::vector<int> digits(cert_->size(), 0);
  for (long long count = 0; count < prod; ++count) {
    Elem x = identity_;
    for (std::size_t i = 0; i < digits.size(); ++i) x = mul(x, pow((*cert_)[i].generator, digits[i]));
    if (seen[x]) throw GroupError("certificate generators are not independent");
    seen[x] = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < (*cert_)[i].order) break;
      digits[i] = 0;
    }
  }
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  const int m = element_order(a);
  long long r = k % m;
  if (r < 0) r += m;
  Elem x = identity_;
  for (long long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

std::string FiniteGroup::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return "g" + std::to_string(a);
}

Elem FiniteGroup::find_label(const std::string& name) const {
  for (Elem a = 0; a < order_; ++a) {
    if (label(a) == name) return a;
  }
  throw GroupError("no element labeled " + name);
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

void FiniteGroup::verify_axioms() const {
  for (Elem a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) throw GroupError("identity axiom fails");
    if (mul(a, inv_[a]) != identity_ || mul(inv_[a], a) != identity_) {
      throw GroupError("inverse axiom fails");
    }
    for (Elem b = 0; b < order_; ++b) {
      const Elem ab = mul(a, b);
      for (Elem c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          std::ostringstream msg;
          msg << "associativity fails at (" << a << "," << b << "," << c << ")";
          throw GroupError(msg.str());
        }
      }
    }
  }
}

void GroupHom::verify() const {
  if (map.size() != static_cast<std::size_t>(source->order())) throw GroupError("hom table size mismatch");
  for (Elem x = 0; x < source->order(); ++x) {
    for (Elem y = 0; y < source->order(); ++y) {
      if (map[source->mul(x, y)] != target->mul(map[x], map[y])) throw GroupError("map is not a homomorphism");
    }
  }
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(static_cast<std::size_t>(target->order()), 0);
  for (Elem y : map) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<Elem> m(static_cast<std::size_t>(g->order()));
  std::iota(m.begin(), m.end(), 0);
  return GroupHom{g, g, std::move(m)};
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members, std::optional<CyclicCertificate> cert)
    : parent_(std::move(parent)), members_(sorted_unique(std::move(members))), cert_(std::move(cert)) {
  position_.assign(static_cast<std::size_t>(parent_->order()), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Elem x = members_[i];
    if (x < 0 || x >= parent_->order()) throw GroupError("subgroup member out of range");
    position_[x] = static_cast<int>(i);
  }
  if (!contains(parent_->identity())) throw GroupError("subgroup lacks the identity");
  for (Elem a : members_) {
    if (!contains(parent_->inv(a))) throw GroupError("subgroup not closed under inverses");
    for (Elem b : members_) {
      if (!contains(parent_->mul(a, b))) throw GroupError("subgroup not closed under multiplication");
    }
  }
  if (cert_) {
    for (const auto& f : *cert_) {
      if (!contains(f.generator)) throw GroupError("certificate generator outside subgroup");
    }
  }
}

int DoubleCosetDecomposition::coset_of(Elem x) const {
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), x)) return static_cast<int>(i);
  }
  throw GroupError("element not covered by double cosets");
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> gens) {
  std::vector<char> in(static_cast<std::size_t>(g->order()), 0);
  std::vector<Elem> members{g->identity()};
  in[g->identity()] = 1;
  std::queue<Elem> todo;
  todo.push(g->identity());
  while (!todo.empty()) {
    const Elem x = todo.front();
    todo.pop();
    for (Elem s : gens) {
      const Elem y = g->mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        todo.push(y);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g->order(); ++x) {
    bool ok = true;
    for (Elem m : h.members()) {
      if (!h.contains(g->conj(m, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup centralizer(const GroupPtr& g, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < g->order(); ++y) {
    if (g->mul(x, y) == g->mul(y, x)) out.push_back(y);
  }
  return Subgroup(g, std::move(out));
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<Elem> commutators;
  std::vector<char> seen(static_cast<std::size_t>(g->order()), 0);
  for (Elem x = 0; x < g->order(); ++x) {
    for (Elem y = 0; y < g->order(); ++y) {
      const Elem c = g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  return subgroup_generated(g, commutators);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

Subgroup stabilizer(const Subgroup& h, Elem g) {
  const auto& G = *h.parent();
  std::vector<Elem> out;
  for (Elem m : h.members()) {
    // m ∈ gHg⁻¹  ⇔  g⁻¹ m g ∈ H
    if (h.contains(G.conj(m, g))) out.push_back(m);
  }
  std::optional<CyclicCertificate> cert;
  if (static_cast<int>(out.size()) == h.size()) cert = h.cyclic_cert();
  if (out.size() == 1) cert = CyclicCertificate{};
  return Subgroup(h.parent(), std::move(out), std::move(cert));
}

bool is_normal(const Subgroup& h) { return normalizer(h.parent(), h).size() == h.parent()->order(); }

DoubleCosetDecomposition double_cosets(const GroupPtr& g, const Subgroup& h, std::span<const Elem> preferred) {
  DoubleCosetDecomposition out;
  std::vector<int> which(static_cast<std::size_t>(g->order()), -1);
  for (Elem x = 0; x < g->order(); ++x) {
    if (which[x] >= 0) continue;
    std::vector<Elem> coset;
    for (Elem a : h.members()) {
      for (Elem b : h.members()) {
        const Elem y = g->mul(a, g->mul(x, b));
        if (which[y] < 0) {
          which[y] = static_cast<int>(out.reps.size());
          coset.push_back(y);
        }
      }
    }
    std::sort(coset.begin(), coset.end());
    out.reps.push_back(x);
    out.cosets.push_back(std::move(coset));
  }
  for (Elem p : preferred) out.reps[which[p]] = p;
  return out;
}

GroupPtr induced_group(const Subgroup& h) {
  const auto& G = *h.parent();
  const int n = h.size();
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      mul[static_cast<std::size_t>(i) * n + j] = h.position(G.mul(h.members()[i], h.members()[j]));
    }
  }
  std::vector<std::string> labels;
  if (G.has_labels()) {
    for (Elem m : h.members()) labels.push_back(G.label(m));
  }
  std::optional<CyclicCertificate> cert;
  if (h.cyclic_cert()) {
    cert.emplace();
    for (const auto& f : *h.cyclic_cert()) cert->push_back({h.position(f.generator), f.order});
  }
  return std::make_shared<FiniteGroup>(n, std::move(mul), std::move(labels), std::move(cert));
}

std::pair<GroupPtr, GroupHom> quotient_group(const Subgroup& normal) {
  const auto& G = normal.parent();
  if (!is_normal(normal)) throw GroupError("quotient by a non-normal subgroup");
  std::vector<Elem> coset_index(static_cast<std::size_t>(G->order()), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < G->order(); ++x) {
    if (coset_index[x] >= 0) continue;
    for (Elem m : normal.members()) coset_index[G->mul(x, m)] = static_cast<Elem>(reps.size());
    reps.push_back(x);
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Elem> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) mul[static_cast<std::size_t>(i) * q + j] = coset_index[G->mul(reps[i], reps[j])];
  }
  std::vector<std::string> labels;
  if (G->has_labels()) {
    for (Elem r : reps) labels.push_back(G->label(r));
  }
  auto Q = std::make_shared<FiniteGroup>(q, std::move(mul), std::move(labels));
  return {Q, GroupHom{G, Q, std::move(coset_index)}};
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  if (n > kMaxGroupOrder) throw GroupError("direct product exceeds the supported order");
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      mul[static_cast<std::size_t>(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  return std::make_shared<FiniteGroup>(n, std::move(mul), std::move(labels));
}

std::map<int, int> order_statistics(const FiniteGroup& g) {
  std::map<int, int> out;
  for (Elem x = 0; x < g.order(); ++x) ++out[g.element_order(x)];
  return out;
}

int exponent(const FiniteGroup& g) {
  int e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

}  // namespace ngcat
