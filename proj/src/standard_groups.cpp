#include "ngcat/standard_groups.hpp"

#include <algorithm>
#include <map>

namespace ngcat {

namespace {

constexpr Permutation kIdentityPerm{0, 1, 2, 3};
constexpr Permutation kCycle123{1, 2, 0, 3};
constexpr Permutation kSwap13{2, 1, 0, 3};
constexpr Permutation kCycle1234{1, 2, 3, 0};

Permutation perm_pow(const Permutation& p, int k) {
  Permutation r = kIdentityPerm;
  for (int i = 0; i < k; ++i) r = compose(r, p);
  return r;
}

Permutation s4_perm_from_form(int x, int y, int z) {
  return compose(perm_pow(kCycle123, x), compose(perm_pow(kSwap13, y), perm_pow(kCycle1234, z)));
}

const std::vector<Permutation>& s4_perms() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 4; ++z) out.push_back(s4_perm_from_form(x, y, z));
    return out;
  }();
  return perms;
}

GroupPtr group_from_perms(const std::vector<Permutation>& perms) {
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
  if (index.size() != perms.size()) throw GroupError("normal forms are not unique");
  const int n = static_cast<int>(perms.size());
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = index.at(compose(perms[a], perms[b]));
  }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_notation(p));
  return std::make_shared<FiniteGroup>(n, std::move(mul), std::move(labels));
}

std::string bits(std::uint32_t v, int width) {
  std::string s;
  for (int i = 0; i < width; ++i) s.push_back((v >> i) & 1U ? '1' : '0');
  return s;
}

// Action of (123)^x(13)^y on V ⊕ V: (13)·(v,w) = (v+w, w), (123)·(v,w) = (v+w, v).
std::pair<std::uint32_t, std::uint32_t> act_s3(int x, int y, std::uint32_t v, std::uint32_t w) {
  if (y == 1) v ^= w;
  for (int i = 0; i < x; ++i) {
    const std::uint32_t nv = v ^ w;
    w = v;
    v = nv;
  }
  return {v, w};
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r{};
  for (int i = 0; i < 4; ++i) r[i] = a[b[i]];
  return r;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::array<bool, 4> seen{};
  for (int start = 0; start < 4; ++start) {
    if (seen[start] || p[start] == start) continue;
    out.push_back('(');
    int i = start;
    while (!seen[i]) {
      seen[i] = true;
      out.push_back(static_cast<char>('1' + i));
      i = p[i];
    }
    out.push_back(')');
  }
  return out.empty() ? "e" : out;
}

Permutation parse_cycles(const std::string& text) {
  Permutation result = kIdentityPerm;
  if (text == "e") return result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw GroupError("bad cycle notation: " + text);
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw GroupError("bad cycle notation: " + text);
    std::vector<int> pts;
    for (std::size_t i = pos + 1; i < close; ++i) {
      const int d = text[i] - '1';
      if (d < 0 || d > 3) throw GroupError("bad point in cycle notation: " + text);
      pts.push_back(d);
    }
    Permutation cyc = kIdentityPerm;
    for (std::size_t i = 0; i < pts.size(); ++i) cyc[pts[i]] = pts[(i + 1) % pts.size()];
    result = compose(result, cyc);
    pos = close + 1;
  }
  return result;
}

GroupPtr symmetric_group(int n) {
  if (n == 3) {
    static const GroupPtr s3 = [] {
      std::vector<Permutation> perms;
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y) perms.push_back(compose(perm_pow(kCycle123, x), perm_pow(kSwap13, y)));
      return group_from_perms(perms);
    }();
    return s3;
  }
  if (n == 4) {
    static const GroupPtr s4 = group_from_perms(s4_perms());
    return s4;
  }
  throw GroupError("symmetric_group supports n in {3,4}, got " + std::to_string(n));
}

S4NormalForm s4_normal_form(Elem g) {
  if (g < 0 || g >= 24) throw GroupError("not an S4 element index");
  return S4NormalForm{g / 8, (g / 4) % 2, g % 4};
}

Elem s4_element(int x, int y, int z) {
  return static_cast<Elem>(((((x % 3) + 3) % 3) * 2 + (((y % 2) + 2) % 2)) * 4 + (((z % 4) + 4) % 4));
}

Elem s4_element(const Permutation& p) {
  const auto& perms = s4_perms();
  const auto it = std::find(perms.begin(), perms.end(), p);
  if (it == perms.end()) throw GroupError("not a permutation of 4 points");
  return static_cast<Elem>(it - perms.begin());
}

Permutation s4_permutation(Elem g) { return s4_perms().at(static_cast<std::size_t>(g)); }

int epsilon_s4(Elem g) {
  const Permutation p = s4_permutation(g);
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j] ? 1 : 0;
  return inversions % 2;
}

GroupHom quotient_pi() {
  const GroupPtr s4 = symmetric_group(4);
  const GroupPtr s3 = symmetric_group(3);
  const std::vector<Elem> klein{s4_element(parse_cycles("e")), s4_element(parse_cycles("(12)(34)")),
                                s4_element(parse_cycles("(13)(24)")), s4_element(parse_cycles("(14)(23)"))};
  const GroupHom incl = s3_into_s4();
  std::vector<Elem> map(24, -1);
  for (Elem sigma = 0; sigma < 6; ++sigma) {
    for (Elem k : klein) map[s4->mul(k, incl(sigma))] = sigma;
  }
  GroupHom pi{s4, s3, std::move(map)};
  pi.verify();
  return pi;
}

GroupHom s3_into_s4() {
  std::vector<Elem> map(6);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 2; ++y) map[s3_element(x, y)] = s4_element(x, y, 0);
  return GroupHom{symmetric_group(3), symmetric_group(4), std::move(map)};
}

Elem GnFamily::element(std::uint32_t v, std::uint32_t w, Elem g) const {
  return static_cast<Elem>(((v << dim()) | w) * 24U + static_cast<std::uint32_t>(g));
}

GnFamily::Parts GnFamily::parts(Elem x) const {
  const auto u = static_cast<std::uint32_t>(x);
  const std::uint32_t vw = u / 24U;
  const std::uint32_t mask = (1U << dim()) - 1U;
  return Parts{vw >> dim(), vw & mask, static_cast<Elem>(u % 24U)};
}

GnFamily build_Gn(int n) {
  if (n < 1) throw GroupError("build_Gn needs n >= 1");
  const int d = n - 1;
  const std::uint32_t vcount = 1U << d;
  const int order = static_cast<int>(vcount * vcount * 24U);
  if (order > kMaxGroupOrder) throw GroupError("G_n exceeds the supported order");
  const std::uint32_t mask = vcount - 1U;
  auto elem = [d](std::uint32_t v, std::uint32_t w, Elem g) {
    return static_cast<Elem>(((v << d) | w) * 24U + static_cast<std::uint32_t>(g));
  };
  auto split = [d, mask](Elem x) {
    const auto u = static_cast<std::uint32_t>(x);
    return GnFamily::Parts{(u / 24U) >> d, (u / 24U) & mask, static_cast<Elem>(u % 24U)};
  };

  const GroupPtr s4 = symmetric_group(4);
  const GroupHom pi = quotient_pi();
  std::vector<Elem> mul(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(static_cast<std::size_t>(order));
  for (Elem a = 0; a < order; ++a) {
    const auto pa = split(a);
    const int sx = pi(pa.g) / 2;
    const int sy = pi(pa.g) % 2;
    for (Elem b = 0; b < order; ++b) {
      const auto pb = split(b);
      const auto [av, aw] = act_s3(sx, sy, pb.v, pb.w);
      mul[static_cast<std::size_t>(a) * order + b] = elem(pa.v ^ av, pa.w ^ aw, s4->mul(pa.g, pb.g));
    }
    if (d == 0 || (pa.v == 0 && pa.w == 0)) {
      labels[a] = s4->label(pa.g);
    } else {
      labels[a] = "(" + bits(pa.v, d) + "," + bits(pa.w, d) + ")";
      if (pa.g != 0) labels[a] += s4->label(pa.g);
    }
  }
  auto group = std::make_shared<FiniteGroup>(order, std::move(mul), std::move(labels));

  std::vector<Elem> pmap(static_cast<std::size_t>(order));
  for (Elem a = 0; a < order; ++a) pmap[a] = split(a).g;
  std::vector<Elem> incl(24);
  for (Elem g = 0; g < 24; ++g) incl[g] = elem(0, 0, g);

  const Elem c1234 = s4_element(0, 0, 1);
  const Elem g1 = s4_element(parse_cycles("(12)(34)"));
  std::vector<Elem> hmem;
  std::vector<Elem> kmem;
  for (std::uint32_t v = 0; v < vcount; ++v) {
    for (int z = 0; z < 4; ++z) hmem.push_back(elem(v, 0, s4_element(0, 0, z)));
    kmem.push_back(elem(0, v, 0));
    kmem.push_back(elem(0, v, g1));
  }
  CyclicCertificate cert{{elem(0, 0, c1234), 4}};
  for (int i = 0; i < d; ++i) cert.push_back({elem(1U << i, 0, 0), 2});

  return GnFamily{n,
                  group,
                  s4,
                  GroupHom{group, s4, std::move(pmap)},
                  GroupHom{s4, group, std::move(incl)},
                  Subgroup(group, std::move(hmem), std::move(cert)),
                  Subgroup(group, std::move(kmem)),
                  elem(0, 0, 0),
                  elem(0, 0, g1),
                  elem(0, 0, s4_element(parse_cycles("(123)")))};
}

int epsilon(const GnFamily& family, Elem x) { return epsilon_s4(family.p(x)); }

GroupPtr cyclic_group(int m) {
  if (m < 1) throw GroupError("cyclic_group needs m >= 1");
  std::vector<Elem> mul(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) mul[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
  }
  CyclicCertificate cert;
  if (m > 1) cert.push_back({1, m});
  return std::make_shared<FiniteGroup>(m, std::move(mul), std::move(labels), std::move(cert));
}

namespace {

GroupPtr metacyclic8(int t) {
  std::vector<Elem> mul(64);
  std::vector<std::string> labels;
  for (int a1 = 0; a1 < 4; ++a1) {
    for (int b1 = 0; b1 < 2; ++b1) {
      labels.push_back("r^" + std::to_string(a1) + "s^" + std::to_string(b1));
      for (int a2 = 0; a2 < 4; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          const int a = ((a1 + (b1 ? -a2 : a2) + 2 * t * (b1 & b2)) % 4 + 4) % 4;
          mul[(2 * a1 + b1) * 8 + 2 * a2 + b2] = 2 * a + (b1 ^ b2);
        }
      }
    }
  }
  return std::make_shared<FiniteGroup>(8, std::move(mul), std::move(labels));
}

}  // namespace

GroupPtr dihedral8() { return metacyclic8(0); }
GroupPtr quaternion8() { return metacyclic8(1); }

}  // namespace ngcat
