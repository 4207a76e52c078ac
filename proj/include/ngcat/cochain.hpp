#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "ngcat/group.hpp"

namespace ngcat {

class CochainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense tables are capped at this many entries.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 22;

/// A k-cochain G^k → μ_N stored as exponents mod N (the value at a tuple is
/// ζ_N^exponent), so the coboundary is Z_N-linear.
///
/// Either dense (a table over G^k, first argument most significant) or a
/// lazy pullback of another cochain along a homomorphism.  Powers of a
/// pullback stay lazy.
class Cochain {
 public:
  /// The trivial (all-zero) dense cochain.
  Cochain(GroupPtr group, int degree, int modulus);

  using Formula = std::function<long long(std::span<const Elem>)>;
  /// Dense cochain with values f(args) mod N.
  static Cochain tabulate(GroupPtr group, int degree, int modulus, const Formula& f);
  /// Lazy c ∘ hom^k on hom.source.
  static Cochain pullback(const Cochain& c, const GroupHom& hom);

  const GroupPtr& group() const { return group_; }
  int degree() const { return degree_; }
  int modulus() const { return modulus_; }
  bool is_dense() const { return base_ == nullptr; }
  /// Exponent table of a dense cochain, else nullptr.
  const std::vector<int>* dense_table() const { return is_dense() ? table_.get() : nullptr; }
  /// For a pullback c ∘ map^k scaled by scale(): c and map, else nullptr.
  const Cochain* pullback_base() const { return base_.get(); }
  const std::vector<Elem>* pullback_map() const { return map_.get(); }
  long long scale() const { return scale_; }

  int operator()(std::span<const Elem> args) const;
  template <class... E>
  int at(E... args) const {
    const Elem a[] = {static_cast<Elem>(args)...};
    return (*this)(std::span<const Elem>(a, sizeof...(E)));
  }

  /// Exponent table multiplied by l mod N.
  Cochain power(long long l) const;
  /// Dense copy.  Throws when |G|^k exceeds kMaxDenseEntries.
  Cochain materialize() const;
  /// Pointwise exponent sum (product of values); operands share the group.
  Cochain operator+(const Cochain& o) const;
  Cochain operator-() const;
  Cochain operator-(const Cochain& o) const { return *this + (-o); }

  /// Exhaustive comparison of values.
  bool equals(const Cochain& o) const;
  bool is_trivial() const;
  /// Value 0 whenever an argument is the identity (exhaustive).
  bool is_normalized() const;

  /// Number of entries in G^k.
  std::size_t tuple_count() const;

 private:
  Cochain() = default;
  std::size_t index_of(std::span<const Elem> args) const;

  GroupPtr group_;
  int degree_ = 0;
  int modulus_ = 1;
  std::shared_ptr<const std::vector<int>> table_;
  std::shared_ptr<const Cochain> base_;
  std::shared_ptr<const std::vector<Elem>> map_;
  long long scale_ = 1;
};

/// Calls f on every tuple of G^k in lexicographic order.
void for_each_tuple(const FiniteGroup& g, int k, const std::function<void(std::span<const Elem>)>& f);

/// Value of dc at a single (k+1)-tuple.
int coboundary_at(const Cochain& c, std::span<const Elem> args);
/// Dense dc: (dc)(g1..g_{k+1}) = c(g2..) + Σ_i (-1)^i c(..g_i g_{i+1}..) + (-1)^{k+1} c(g1..g_k).
Cochain coboundary(const Cochain& c);
/// dc = 0, exhaustively.
bool is_cocycle(const Cochain& c);
/// dc = 0 on `samples` random tuples drawn with `rng`.
bool is_cocycle_sampled(const Cochain& c, std::size_t samples, std::mt19937_64& rng);

/// Precomposition with a surjection q: G → Q (lazy).
Cochain inflate(const Cochain& c, const GroupHom& q);
/// Restriction to a subgroup, as a cochain on induced_group(s) (lazy).
Cochain restrict(const Cochain& c, const Subgroup& s);

/// Solves dx = c for a (k-1)-cochain x.  Returns nullopt iff no μ_N-valued
/// solution exists.  Deterministic: free coordinates are zero.
std::optional<Cochain> solve_coboundary(const Cochain& c);

/// Adaptedness of a 3-cochain for H: ω(g1, g2, h) = 0 for h ∈ H.  Checked on
/// every triple when |G|^2|H| <= exhaustive_limit, otherwise on `samples`
/// random triples.  Returns the number of triples checked; throws
/// CochainError on the first violation.
std::size_t check_adapted(const Cochain& omega, const Subgroup& h, std::size_t samples, std::uint64_t seed,
                          std::size_t exhaustive_limit);

enum class MultiplierFormula { kAdaptedShortcut, kGeneral };

struct SchurMultiplier {
  Subgroup stabilizer;       // H^g = H ∩ gHg⁻¹
  GroupPtr stabilizer_group; // induced_group(stabilizer)
  Cochain cocycle;           // degree 2 on stabilizer_group
};

/// The 2-cocycle governing projective characters of H^g.  The shortcut
/// ω_g(h,k) = ω(h,k,g) is valid for adapted ω; the general formula is
/// ω(h,k,g)·ω(h,kg,k⁻¹◁g)/ω(hkg,k⁻¹◁g,h⁻¹◁g).  Requesting the shortcut
/// also evaluates the general formula and throws CochainError if the two
/// disagree, which happens exactly when ω is not adapted on these entries.
SchurMultiplier schur_multiplier(const Cochain& omega, Elem g, const Subgroup& h,
                                 MultiplierFormula formula = MultiplierFormula::kAdaptedShortcut);

}  // namespace ngcat
