#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "ngcat/character.hpp"
#include "ngcat/cochain.hpp"
#include "ngcat/cyclotomic.hpp"
#include "ngcat/group.hpp"

namespace ngcat {

class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A double coset whose stabilizer or multiplier needs projective characters
/// of degree > 1.
class UnsupportedConfiguration : public CategoryError {
 public:
  using CategoryError::CategoryError;
};

class NotNearGroup : public CategoryError {
 public:
  using CategoryError::CategoryError;
};

/// 𝒞(G, ω, H, 1) for an adapted 3-cocycle ω.  `l` is only a label; every
/// computation reads `omega`.
struct GTCategory {
  GroupPtr G;
  Subgroup H;
  Cochain omega;
  int l = 0;
  DoubleCosetDecomposition cosets;
};

/// Checks adaptedness (every triple when |G| <= 24, otherwise `samples`
/// random triples) and decomposes G into H-double cosets.  Entries of
/// `preferred_reps` become the representatives of their cosets.
GTCategory build_category(GroupPtr G, Subgroup H, Cochain omega, int l, std::size_t samples = 1'000'000,
                          std::uint64_t seed = 42, std::span<const Elem> preferred_reps = {});

/// X_{g,χ}: a double coset HgH with a degree-1 projective character χ of
/// H^g for the multiplier ω_g, stored as exponents on induced_group(H^g).
struct SimpleObject {
  int coset = 0;
  Elem rep = 0;
  Subgroup stabilizer;
  GroupPtr stabilizer_group;
  Character character;
  int fpdim = 1;

  bool operator==(const SimpleObject& o) const { return coset == o.coset && character == o.character; }
};

/// Simples in coset order; within a coset, τ·η for τ in dual_group order.
std::vector<SimpleObject> simples(const GTCategory& cat);

struct NearGroupSummary {
  int invertible_count = 0;
  SimpleObject rho;
  int d = 0;
  int m = 0;
};

/// Requires exactly one non-invertible simple and Σ fpdim² = |G|.
NearGroupSummary near_group_check(const GTCategory& cat, const std::vector<SimpleObject>& simple_objects);

/// π_k(x) as an exponent: π_0 = 0, π_{k+1} = π_k + ω(x, x^k, x), extended to
/// negative k by the same recursion.
int pi(Elem x, long long k, const Cochain& omega);

/// ν_k(X_{g,χ}) = (1/|H^g|) Σ_{r ∈ gH, r^k ∈ H^g} π_{-k}(r) χ(r^{-k}).
/// Throws CategoryError if the division is not exact.
CycInt fs_indicator(const GTCategory& cat, const SimpleObject& s, int k);

}  // namespace ngcat
