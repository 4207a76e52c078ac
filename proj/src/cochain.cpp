#include "ngcat/cochain.hpp"

#include <sstream>

#include "ngcat/modular_solver.hpp"

namespace ngcat {

namespace {

int reduce_mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::size_t checked_power(int base, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= static_cast<std::size_t>(base);
    if (r > kMaxDenseEntries) throw CochainError("cochain table too large to materialize");
  }
  return r;
}

}  // namespace

Cochain::Cochain(GroupPtr group, int degree, int modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus) {
  if (degree_ < 0) throw CochainError("negative cochain degree");
  if (modulus_ < 1) throw CochainError("cochain modulus must be positive");
  table_ = std::make_shared<const std::vector<int>>(checked_power(group_->order(), degree_), 0);
}

Cochain Cochain::tabulate(GroupPtr group, int degree, int modulus, const Formula& f) {
  Cochain c(group, degree, modulus);
  std::vector<int> table(c.tuple_count());
  std::size_t i = 0;
  for_each_tuple(*group, degree, [&](std::span<const Elem> args) { table[i++] = reduce_mod(f(args), modulus); });
  c.table_ = std::make_shared<const std::vector<int>>(std::move(table));
  return c;
}

Cochain Cochain::pullback(const Cochain& c, const GroupHom& hom) {
  if (hom.target->order() != c.group()->order()) throw CochainError("pullback along a map into a different group");
  Cochain out;
  out.group_ = hom.source;
  out.degree_ = c.degree_;
  out.modulus_ = c.modulus_;
  out.base_ = std::make_shared<const Cochain>(c);
  out.map_ = std::make_shared<const std::vector<Elem>>(hom.map);
  return out;
}

std::size_t Cochain::tuple_count() const {
  std::size_t r = 1;
  for (int i = 0; i < degree_; ++i) r *= static_cast<std::size_t>(group_->order());
  return r;
}

std::size_t Cochain::index_of(std::span<const Elem> args) const {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * static_cast<std::size_t>(group_->order()) + static_cast<std::size_t>(a);
  return idx;
}

int Cochain::operator()(std::span<const Elem> args) const {
  if (static_cast<int>(args.size()) != degree_) throw CochainError("wrong number of cochain arguments");
  if (base_ == nullptr) return (*table_)[index_of(args)];
  Elem mapped[8];
  if (args.size() > 8) throw CochainError("pullback evaluation supports degree <= 8");
  for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = (*map_)[args[i]];
  const long long v = (*base_)(std::span<const Elem>(mapped, args.size()));
  return reduce_mod(v * scale_, modulus_);
}

Cochain Cochain::power(long long l) const {
  Cochain out = *this;
  if (base_ != nullptr) {
    out.scale_ = reduce_mod(scale_ * reduce_mod(l, modulus_), modulus_);
    return out;
  }
  std::vector<int> t(*table_);
  const long long lr = reduce_mod(l, modulus_);
  for (int& v : t) v = reduce_mod(v * lr, modulus_);
  out.table_ = std::make_shared<const std::vector<int>>(std::move(t));
  return out;
}

Cochain Cochain::materialize() const {
  if (base_ == nullptr) return *this;
  checked_power(group_->order(), degree_);
  return tabulate(group_, degree_, modulus_, [this](std::span<const Elem> a) { return (*this)(a); });
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (group_ != o.group_ || degree_ != o.degree_ || modulus_ != o.modulus_) {
    throw CochainError("adding cochains of different shape");
  }
  return tabulate(group_, degree_, modulus_, [&](std::span<const Elem> a) { return (*this)(a) + o(a); });
}

Cochain Cochain::operator-() const { return power(-1); }

bool Cochain::equals(const Cochain& o) const {
  if (group_->order() != o.group_->order() || degree_ != o.degree_ || modulus_ != o.modulus_) return false;
  bool same = true;
  for_each_tuple(*group_, degree_, [&](std::span<const Elem> a) {
    if (same && (*this)(a) != o(a)) same = false;
  });
  return same;
}

bool Cochain::is_trivial() const {
  bool zero = true;
  for_each_tuple(*group_, degree_, [&](std::span<const Elem> a) {
    if (zero && (*this)(a) != 0) zero = false;
  });
  return zero;
}

bool Cochain::is_normalized() const {
  const Elem e = group_->identity();
  bool ok = true;
  for_each_tuple(*group_, degree_, [&](std::span<const Elem> a) {
    if (!ok) return;
    for (Elem x : a) {
      if (x == e && (*this)(a) != 0) ok = false;
    }
  });
  return ok;
}

void for_each_tuple(const FiniteGroup& g, int k, const std::function<void(std::span<const Elem>)>& f) {
  std::vector<Elem> t(static_cast<std::size_t>(k), 0);
  const int n = g.order();
  while (true) {
    f(t);
    int i = k - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) return;
  }
}

int coboundary_at(const Cochain& c, std::span<const Elem> args) {
  const int k = c.degree();
  if (static_cast<int>(args.size()) != k + 1) throw CochainError("coboundary needs k+1 arguments");
  const FiniteGroup& g = *c.group();
  const int n = c.modulus();
  Elem buf[9];
  if (k > 8) throw CochainError("coboundary supports degree <= 8");
  const std::span<const Elem> view(buf, static_cast<std::size_t>(k));

  long long sum = 0;
  for (int i = 0; i < k; ++i) buf[i] = args[i + 1];
  sum += c(view);
  for (int i = 1; i <= k; ++i) {
    int pos = 0;
    for (int j = 0; j <= k; ++j) {
      if (j == i - 1) {
        buf[pos++] = g.mul(args[j], args[j + 1]);
        ++j;
      } else {
        buf[pos++] = args[j];
      }
    }
    sum += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(c(view));
  }
  for (int i = 0; i < k; ++i) buf[i] = args[i];
  sum += ((k + 1) % 2 == 0 ? 1 : -1) * static_cast<long long>(c(view));
  return reduce_mod(sum, n);
}

Cochain coboundary(const Cochain& c) {
  if (c.degree() > 3) throw CochainError("coboundary supports degrees 0..3");
  return Cochain::tabulate(c.group(), c.degree() + 1, c.modulus(),
                           [&](std::span<const Elem> a) { return coboundary_at(c, a); });
}

bool is_cocycle(const Cochain& c) {
  bool ok = true;
  for_each_tuple(*c.group(), c.degree() + 1, [&](std::span<const Elem> a) {
    if (ok && coboundary_at(c, a) != 0) ok = false;
  });
  return ok;
}

bool is_cocycle_sampled(const Cochain& c, std::size_t samples, std::mt19937_64& rng) {
  const auto n = static_cast<std::uint64_t>(c.group()->order());
  std::vector<Elem> t(static_cast<std::size_t>(c.degree()) + 1);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& x : t) x = static_cast<Elem>(rng() % n);
    if (coboundary_at(c, t) != 0) return false;
  }
  return true;
}

Cochain inflate(const Cochain& c, const GroupHom& q) {
  if (!q.is_surjective()) throw CochainError("inflation along a non-surjective map");
  return Cochain::pullback(c, q);
}

Cochain restrict(const Cochain& c, const Subgroup& s) {
  if (s.parent()->order() != c.group()->order()) throw CochainError("restriction to a subgroup of another group");
  return Cochain::pullback(c, GroupHom{induced_group(s), s.parent(), s.members()});
}

std::optional<Cochain> solve_coboundary(const Cochain& c) {
  const int k = c.degree() - 1;
  if (k < 0) throw CochainError("solve_coboundary needs degree >= 1");
  const FiniteGroup& g = *c.group();
  const Cochain unknowns(c.group(), k, c.modulus());
  const std::size_t cols = unknowns.tuple_count();
  const std::size_t rows = c.tuple_count();
  if (rows * cols > kMaxDenseEntries * 4) throw CochainError("coboundary system too large");

  // Column index of a k-tuple.
  auto col_of = [&](std::span<const Elem> t) {
    std::size_t idx = 0;
    for (Elem a : t) idx = idx * static_cast<std::size_t>(g.order()) + static_cast<std::size_t>(a);
    return idx;
  };

  IntMatrix a;
  a.reserve(rows);
  std::vector<std::int64_t> b;
  b.reserve(rows);
  std::vector<Elem> buf(static_cast<std::size_t>(k));
  for_each_tuple(g, k + 1, [&](std::span<const Elem> args) {
    std::vector<std::int64_t> row(cols, 0);
    for (int i = 0; i < k; ++i) buf[i] = args[i + 1];
    row[col_of(buf)] += 1;
    for (int i = 1; i <= k; ++i) {
      int pos = 0;
      for (int j = 0; j <= k; ++j) {
        if (j == i - 1) {
          buf[pos++] = g.mul(args[j], args[j + 1]);
          ++j;
        } else {
          buf[pos++] = args[j];
        }
      }
      row[col_of(buf)] += (i % 2 == 0 ? 1 : -1);
    }
    for (int i = 0; i < k; ++i) buf[i] = args[i];
    row[col_of(buf)] += ((k + 1) % 2 == 0 ? 1 : -1);
    a.push_back(std::move(row));
    b.push_back(c(args));
  });

  auto x = solve_mod(a, b, c.modulus());
  if (!x) return std::nullopt;
  std::size_t i = 0;
  return Cochain::tabulate(c.group(), k, c.modulus(), [&](std::span<const Elem>) { return (*x)[i++]; });
}

std::size_t check_adapted(const Cochain& omega, const Subgroup& h, std::size_t samples, std::uint64_t seed,
                          std::size_t exhaustive_limit) {
  if (omega.degree() != 3) throw CochainError("adaptedness is a property of 3-cochains");
  const FiniteGroup& g = *omega.group();
  const auto n = static_cast<std::size_t>(g.order());
  auto fail = [&](Elem a, Elem b, Elem c) {
    std::ostringstream msg;
    msg << "cocycle not adapted: omega(" << g.label(a) << "," << g.label(b) << "," << g.label(c) << ") != 1";
    throw CochainError(msg.str());
  };
  if (n * n * static_cast<std::size_t>(h.size()) <= exhaustive_limit) {
    std::size_t count = 0;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        for (Elem c : h.members()) {
          ++count;
          if (omega.at(a, b, c) != 0) fail(a, b, c);
        }
    return count;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = static_cast<Elem>(rng() % n);
    const auto b = static_cast<Elem>(rng() % n);
    const Elem c = h.members()[rng() % static_cast<std::uint64_t>(h.size())];
    if (omega.at(a, b, c) != 0) fail(a, b, c);
  }
  return samples;
}

SchurMultiplier schur_multiplier(const Cochain& omega, Elem g, const Subgroup& h, MultiplierFormula formula) {
  if (omega.degree() != 3) throw CochainError("Schur multiplier needs a 3-cochain");
  const FiniteGroup& G = *omega.group();
  Subgroup stab = stabilizer(h, g);
  GroupPtr sg = induced_group(stab);
  const auto& mem = stab.members();

  auto general = [&](std::span<const Elem> a) -> long long {
    const Elem hh = mem[a[0]];
    const Elem kk = mem[a[1]];
    const Elem kinv_g = G.conj(G.inv(kk), g);
    const Elem hinv_g = G.conj(G.inv(hh), g);
    return static_cast<long long>(omega.at(hh, kk, g)) + omega.at(hh, G.mul(kk, g), kinv_g) -
           omega.at(G.mul(G.mul(hh, kk), g), kinv_g, hinv_g);
  };
  Cochain full = Cochain::tabulate(sg, 2, omega.modulus(), general);
  if (formula == MultiplierFormula::kGeneral) return SchurMultiplier{std::move(stab), sg, std::move(full)};

  Cochain shortcut = Cochain::tabulate(
      sg, 2, omega.modulus(), [&](std::span<const Elem> a) { return omega.at(mem[a[0]], mem[a[1]], g); });
  if (!shortcut.equals(full)) {
    throw CochainError("adapted-shortcut Schur multiplier disagrees with the general formula at " + G.label(g) +
                       ": cocycle is not adapted");
  }
  return SchurMultiplier{std::move(stab), sg, std::move(shortcut)};
}

}  // namespace ngcat
