#include "ngcat/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace ngcat {

namespace {

// Exact quotient of a by the monic polynomial b (both lowest degree first).
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& r : a) {
    if (r != 0) throw CyclotomicError("cyclotomic recursion left a remainder");
  }
  return q;
}

// Reduce a raw coefficient vector modulo the monic Φ_N.
void reduce(std::vector<mpq_class>& raw, const std::vector<mpz_class>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    if (raw[i] == 0) continue;
    const mpq_class c = raw[i];
    for (std::size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * phi[j];
  }
  raw.resize(deg, 0);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw CyclotomicError("cyclotomic modulus must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d
  std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

CycInt::CycInt(int modulus) : modulus_(modulus) {
  coeffs_.assign(static_cast<std::size_t>(cyclotomic_polynomial(modulus).size() - 1), 0);
}

CycInt::CycInt(int modulus, std::vector<mpq_class> raw) : modulus_(modulus), coeffs_(std::move(raw)) {
  reduce(coeffs_, cyclotomic_polynomial(modulus_));
}

CycInt CycInt::from_integer(long long value, int modulus) {
  CycInt out(modulus);
  out.coeffs_[0] = mpq_class(mpz_class(std::to_string(value)));
  return out;
}

CycInt CycInt::root_of_unity(long long k, int modulus) {
  long long r = k % modulus;
  if (r < 0) r += modulus;
  std::vector<mpq_class> raw(static_cast<std::size_t>(r) + 1, 0);
  raw[r] = 1;
  if (raw.size() < static_cast<std::size_t>(euler_phi(modulus))) raw.resize(euler_phi(modulus), 0);
  return CycInt(modulus, std::move(raw));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycInt::check_same(const CycInt& o) const {
  if (modulus_ != o.modulus_) {
    throw CyclotomicError("mixed cyclotomic moduli " + std::to_string(modulus_) + " and " +
                          std::to_string(o.modulus_));
  }
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt out = *this;
  out += o;
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator*(const CycInt& o) const {
  check_same(o);
  const std::size_t n = coeffs_.size();
  std::vector<mpq_class> raw(n == 0 ? 0 : 2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) raw[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return CycInt(modulus_, std::move(raw));
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt CycInt::conj() const {
  std::vector<mpq_class> raw(static_cast<std::size_t>(modulus_), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[(modulus_ - static_cast<int>(i)) % modulus_] += coeffs_[i];
  return CycInt(modulus_, std::move(raw));
}

CycInt CycInt::divided_by(long long d) const {
  if (d == 0) throw CyclotomicError("division by zero");
  CycInt out = *this;
  const mpq_class q(mpz_class(std::to_string(d)));
  for (auto& c : out.coeffs_) c /= q;
  return out;
}

bool CycInt::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::optional<long long> CycInt::as_rational_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  if (coeffs_.empty()) return 0;
  if (coeffs_[0].get_den() != 1 || !coeffs_[0].get_num().fits_slong_p()) return std::nullopt;
  return coeffs_[0].get_num().get_si();
}

std::complex<double> CycInt::approx() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / modulus_;
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "ζ" << modulus_ << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

bool CycInt::operator==(const CycInt& o) const { return modulus_ == o.modulus_ && coeffs_ == o.coeffs_; }

}  // namespace ngcat
