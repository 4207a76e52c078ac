#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ngcat {

/// Index of an element inside a FiniteGroup's multiplication table.
using Elem = std::int32_t;

/// Largest group order the table-driven machinery accepts.
inline constexpr int kMaxGroupOrder = 512;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One factor of an independent cyclic decomposition: `generator` has
/// multiplicative order `order`.
struct CyclicFactor {
  Elem generator;
  int order;

  bool operator==(const CyclicFactor&) const = default;
};

using CyclicCertificate = std::vector<CyclicFactor>;

/// A finite group stored as a dense multiplication table.
///
/// Construction checks that the table is a Latin square with a two-sided
/// identity and two-sided inverses; associativity is checked separately by
/// verify_axioms() because it costs |G|^3.  A cyclic certificate, when
/// supplied, is verified on construction: the group must be abelian and
/// every element must factor uniquely over the certificate generators.
class FiniteGroup {
 public:
  FiniteGroup(int order, std::vector<Elem> table, std::vector<std::string> labels = {},
              std::optional<CyclicCertificate> cert = std::nullopt);

  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, long long k) const;
  /// Right adjoint action x ◁ g = g⁻¹ x g.
  Elem conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }
  int element_order(Elem a) const { return elem_order_[a]; }

  std::span<const Elem> table() const { return mul_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(Elem a) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Element with the given label; throws if absent.
  Elem find_label(const std::string& name) const;

  const std::optional<CyclicCertificate>& cyclic_cert() const { return cert_; }
  bool is_abelian() const;

  /// Exhaustive associativity / identity / inverse check.  Throws GroupError.
  void verify_axioms() const;

 private:
  void verify_certificate() const;

  int order_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<int> elem_order_;
  Elem identity_ = 0;
  std::vector<std::string> labels_;
  std::optional<CyclicCertificate> cert_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A homomorphism given by its value table.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  /// Exhaustive homomorphism check; throws GroupError.
  void verify() const;
  bool is_surjective() const;
};

GroupHom identity_hom(GroupPtr g);

/// A subgroup of `parent` given by its sorted member list.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> members,
           std::optional<CyclicCertificate> cert = std::nullopt);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Elem x) const { return position_[x] >= 0; }
  /// Position of `x` inside members(), or -1.
  int position(Elem x) const { return position_[x]; }
  /// Certificate expressed in parent element indices.
  const std::optional<CyclicCertificate>& cyclic_cert() const { return cert_; }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<int> position_;
  std::optional<CyclicCertificate> cert_;
};

struct DoubleCosetDecomposition {
  std::vector<Elem> reps;
  std::vector<std::vector<Elem>> cosets;

  /// Index of the coset containing `x`.
  int coset_of(Elem x) const;
};

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Elem> gens);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, Elem x);
/// H ∩ gHg⁻¹.
Subgroup stabilizer(const Subgroup& h, Elem g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& h);

/// H\G/H with minimal-index representatives.  Each entry of `preferred`
/// replaces the representative of the coset containing it.
DoubleCosetDecomposition double_cosets(const GroupPtr& g, const Subgroup& h,
                                       std::span<const Elem> preferred = {});

/// The subgroup as a group in its own right: element i is members()[i].
GroupPtr induced_group(const Subgroup& h);
/// G/N for normal N, elements indexed by increasing minimal coset member.
std::pair<GroupPtr, GroupHom> quotient_group(const Subgroup& normal);
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::map<int, int> order_statistics(const FiniteGroup& g);
int exponent(const FiniteGroup& g);

}  // namespace ngcat
