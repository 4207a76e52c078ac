#include "ngcat/character.hpp"

namespace ngcat {

std::vector<Character> dual_group(const FiniteGroup& h, int modulus) {
  if (!h.cyclic_cert()) throw GroupError("dual_group needs a cyclic decomposition certificate");
  const auto& cert = *h.cyclic_cert();
  for (const auto& f : cert) {
    if (modulus % f.order != 0) {
      throw GroupError("certificate order " + std::to_string(f.order) + " does not divide N=" +
                       std::to_string(modulus));
    }
  }

  // coords[x] = exponent vector of x over the certificate generators
  std::vector<std::vector<int>> coords(static_cast<std::size_t>(h.order()));
  std::vector<int> digits(cert.size(), 0);
  for (int count = 0; count < h.order(); ++count) {
    Elem x = h.identity();
    for (std::size_t i = 0; i < cert.size(); ++i) x = h.mul(x, h.pow(cert[i].generator, digits[i]));
    coords[x] = digits;
    for (std::size_t i = 0; i < cert.size(); ++i) {
      if (++digits[i] < cert[i].order) break;
      digits[i] = 0;
    }
  }

  std::vector<Character> out;
  std::vector<int> js(cert.size(), 0);
  for (int count = 0; count < h.order(); ++count) {
    Character c;
    c.values.resize(static_cast<std::size_t>(h.order()));
    for (Elem x = 0; x < h.order(); ++x) {
      long long e = 0;
      for (std::size_t i = 0; i < cert.size(); ++i) {
        e += static_cast<long long>(modulus / cert[i].order) * js[i] * coords[x][i];
      }
      c.values[x] = static_cast<int>(e % modulus);
    }
    out.push_back(std::move(c));
    for (std::size_t i = 0; i < cert.size(); ++i) {
      if (++js[i] < cert[i].order) break;
      js[i] = 0;
    }
  }
  return out;
}

bool is_homomorphism(const FiniteGroup& h, const Character& c, int modulus) {
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      if ((c.values[a] + c.values[b]) % modulus != c.values[h.mul(a, b)]) return false;
    }
  }
  return true;
}

Character char_mul(const Character& a, const Character& b, int modulus) {
  Character out;
  out.values.resize(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = (a.values[i] + b.values[i]) % modulus;
  return out;
}

Character char_trivial(const FiniteGroup& h) {
  return Character{std::vector<int>(static_cast<std::size_t>(h.order()), 0)};
}

}  // namespace ngcat
