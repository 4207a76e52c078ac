#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ngcat {

inline constexpr int kDefaultModulus = 36;

class CyclotomicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);
int euler_phi(int n);

/// An element of Q(ζ_N) in the power basis 1, ζ, …, ζ^{φ(N)-1}, reduced
/// modulo Φ_N.  The representation is canonical, so equality is coefficient
/// equality.
class CycInt {
 public:
  explicit CycInt(int modulus = kDefaultModulus);
  static CycInt from_integer(long long value, int modulus = kDefaultModulus);
  /// ζ_N^k, k taken mod N.
  static CycInt root_of_unity(long long k, int modulus = kDefaultModulus);

  int modulus() const { return modulus_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  /// Complex conjugation ζ^k ↦ ζ^{N-k}.
  CycInt conj() const;
  /// Division by a nonzero integer, exact in Q(ζ_N).
  CycInt divided_by(long long d) const;
  /// True iff every coefficient is an integer (membership in Z[ζ_N]).
  bool is_integral() const;

  std::optional<long long> as_rational_integer() const;
  /// Floating-point value; display only.
  std::complex<double> approx() const;
  /// Canonical text form, e.g. "2 - ζ36^6 + 1/2*ζ36^11"; "0" for zero.
  std::string to_string() const;

  bool operator==(const CycInt& o) const;

 private:
  CycInt(int modulus, std::vector<mpq_class> raw);
  void check_same(const CycInt& o) const;

  int modulus_;
  std::vector<mpq_class> coeffs_;
};

inline CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt neg(const CycInt& a) { return -a; }
inline CycInt conj(const CycInt& a) { return a.conj(); }

}  // namespace ngcat
