#pragma once

#include <vector>

#include "ngcat/group.hpp"

namespace ngcat {

/// A μ_N-valued function on a group, stored as exponents mod N: the value
/// at element i is ζ_N^values[i].
struct Character {
  std::vector<int> values;

  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

/// All |H| linear characters of an abelian group carrying a cyclic
/// certificate.  A certificate generator of order m is sent to
/// ζ_N^{(N/m)·j}; the j-tuples are enumerated with the first certificate
/// factor varying fastest, so the character at index j of a single cyclic
/// factor is the j-th power of the generator character.
std::vector<Character> dual_group(const FiniteGroup& h, int modulus);

bool is_homomorphism(const FiniteGroup& h, const Character& c, int modulus);
Character char_mul(const Character& a, const Character& b, int modulus);
Character char_trivial(const FiniteGroup& h);

}  // namespace ngcat
