#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngcat/category.hpp"

namespace ngcat {

/// Picks η with dη = ω_s for a K representative s.  Receives s and ω_s on
/// induced_group(H); returning nullopt drops s from K.
using EtaChooser = std::function<std::optional<Cochain>(Elem, const Cochain&)>;

/// Data of the extension 1 → Ĥ → Γ → K → 1.
struct TwistData {
  GroupPtr H_group;            // induced_group(cat.H)
  std::vector<Elem> K;         // representatives, K[0] = identity
  std::vector<std::string> K_labels;
  std::vector<std::vector<int>> conj;  // conj[s][h] = position of K[s]⁻¹·h·K[s] in H
  std::vector<std::vector<int>> law;  // K[i]·K[j] ∈ K[law[i][j]]·H
  std::vector<Cochain> eta;    // degree 1 on H_group, dη_s = ω_s, η_e = 0
  std::vector<std::vector<Character>> nu;  // ν(s,t) = η_s ˢη_t / η_{s·t}
  int modulus = kDefaultModulus;

  /// ˢψ(h) = ψ(s⁻¹hs).
  Character act(int s, const Character& psi) const;
};

/// Double-coset representatives normalizing H whose multiplier is a
/// coboundary.  `chooser` defaults to the deterministic coboundary solver;
/// its output is checked.  Throws CategoryError if K is not closed or some
/// ν(s,t) is not a character.
TwistData compute_K(const GTCategory& cat, const EtaChooser& chooser = {});

/// ν(s,t)-cocycle identity ˢν(t,u)·ν(s,tu) = ν(s,t)·ν(st,u) on all of K³.
bool nu_is_cocycle(const TwistData& t);

struct ExtensionGroup {
  GroupPtr group;
  std::vector<std::pair<int, int>> labels;  // element i is (character index, K index)
};

/// Ĥ ×_ν K with (χ,s)(ψ,t) = (ν(s,t)χ ˢψ, s·t); element index s·|Ĥ| + χ.
/// Group axioms are checked exhaustively.
ExtensionGroup build_extension(const TwistData& t, const std::vector<Character>& h_dual);

/// (A × B)/<(zA, zB)> for central involutions zA, zB.
GroupPtr central_product(const FiniteGroup& a, const FiniteGroup& b, Elem za, Elem zb);

struct GroupFingerprint {
  int order = 0;
  int center_order = 0;
  int derived_order = 0;
  int exponent = 0;
  std::map<int, int> order_statistics;
  bool is_extraspecial_2group = false;

  bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const GroupPtr& g);

/// Backtracking search for an isomorphism; orders up to kMaxGroupOrder.
bool isomorphic(const GroupPtr& a, const GroupPtr& b);

/// D8^{∘n} when `plus`, else Q8∘D8^{∘(n-1)}.
GroupPtr extraspecial_reference(int n, bool plus);
std::string extraspecial_name(int n, bool plus);

}  // namespace ngcat
