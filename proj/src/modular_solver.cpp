#include "ngcat/modular_solver.hpp"

#include <stdexcept>
#include <utility>

namespace ngcat {

namespace {

struct PrimePower {
  std::int64_t p;
  int e;
  std::int64_t q;
};

std::vector<PrimePower> factor(std::int64_t n) {
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.e;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// Inverse of a unit modulo m.
std::int64_t inverse(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    r0 -= t * r1;
    std::swap(r0, r1);
    s0 -= t * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::logic_error("inverse of a non-unit");
  return mod(s0, m);
}

// p-adic valuation of a residue modulo p^e; e for zero.
int valuation(std::int64_t a, const PrimePower& pp) {
  if (a == 0) return pp.e;
  int v = 0;
  while (a % pp.p == 0) {
    a /= pp.p;
    ++v;
  }
  return v;
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::optional<std::vector<std::int64_t>> solve_prime_power(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                           const PrimePower& pp) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const std::int64_t q = pp.q;

  IntMatrix m(rows, std::vector<std::int64_t>(cols));
  std::vector<std::int64_t> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(a[i][j], q);
    rhs[i] = mod(b[i], q);
  }
  // Column transform: x = colx · y.
  IntMatrix colx(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) colx[j][j] = 1;

  std::vector<int> pivot_val;
  std::size_t rank = 0;
  while (rank < rows && rank < cols) {
    int best = pp.e;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = rank; i < rows && best > 0; ++i) {
      for (std::size_t j = rank; j < cols; ++j) {
        const int v = valuation(m[i][j], pp);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best == pp.e) break;

    std::swap(m[rank], m[bi]);
    std::swap(rhs[rank], rhs[bi]);
    if (bj != rank) {
      for (auto& row : m) std::swap(row[rank], row[bj]);
      for (auto& row : colx) std::swap(row[rank], row[bj]);
    }

    const std::int64_t pv = ipow(pp.p, best);
    const std::int64_t unit_inv = inverse(m[rank][rank] / pv, q);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][rank] == 0) continue;
      const std::int64_t f = mod((m[i][rank] / pv) * unit_inv, q);
      for (std::size_t j = rank; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[rank][j], q);
      rhs[i] = mod(rhs[i] - f * rhs[rank], q);
    }
    for (std::size_t j = rank + 1; j < cols; ++j) {
      if (m[rank][j] == 0) continue;
      const std::int64_t f = mod((m[rank][j] / pv) * unit_inv, q);
      for (std::size_t i = rank; i < rows; ++i) m[i][j] = mod(m[i][j] - f * m[i][rank], q);
      for (auto& row : colx) row[j] = mod(row[j] - f * row[rank], q);
    }
    pivot_val.push_back(best);
    ++rank;
  }

  for (std::size_t i = rank; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t t = 0; t < rank; ++t) {
    const int v = pivot_val[t];
    if (valuation(rhs[t], pp) < v) return std::nullopt;
    const std::int64_t pv = ipow(pp.p, v);
    const std::int64_t reduced_q = q / pv;
    y[t] = mod((rhs[t] / pv) * inverse(m[t][t] / pv, reduced_q), reduced_q);
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols; ++j) s = mod(s + colx[i][j] * y[j], q);
    x[i] = s;
  }
  return x;
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                                   std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  std::vector<std::int64_t> x(cols, 0);
  if (modulus == 1) return x;

  std::int64_t combined_mod = 1;
  for (const auto& pp : factor(modulus)) {
    auto part = solve_prime_power(a, b, pp);
    if (!part) return std::nullopt;
    // CRT: x ≡ x (mod combined_mod), x ≡ part (mod q)
    const std::int64_t inv = inverse(combined_mod % pp.q, pp.q);
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t t = mod(((*part)[j] - x[j]) % pp.q * inv, pp.q);
      x[j] += combined_mod * t;
    }
    combined_mod *= pp.q;
  }
  return x;
}

}  // namespace ngcat
