#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "artin/group.hpp"
#include "artin/orderings.hpp"

namespace artin {

/// x = y Delta_I rev(y).
struct PalDecomposition {
  GroupElement y;
  GeneratorSet subset;
};

GroupElement pal(const ArtinGroup& g, const GroupElement& x);
/// The unique d with pal(d) = x. Throws NotAPalindrome or NotPure.
GroupElement unpal(const ArtinGroup& g, const GroupElement& x);

GroupElement reconstruct(const ArtinGroup& g, const PalDecomposition& d);
bool reconstructs(const ArtinGroup& g, const PalDecomposition& d, const GroupElement& x);

/// Peeling recursion: stop at x = Delta_{S(x)}, otherwise x = s a s with s the smallest
/// generator of F(Delta_{S(x)} \ x). Throws NotAPalindrome.
PalDecomposition decompose(const ArtinGroup& g, const GroupElement& x);

inline constexpr std::size_t kDefaultSearchBudget = 200'000;

/// Every decomposition of x whose y lies in Delta^-N A+, where Delta^(2N) x is the
/// positive core used by `decompose`. Distinct entries are distinct pairs (I, y).
std::vector<PalDecomposition> all_decompositions(const ArtinGroup& g, const GroupElement& x,
                                                 std::size_t budget = kDefaultSearchBudget);

struct CanonicalOptions {
  bool opposite = false;  ///< order Delta_I by the opposite order
  std::size_t budget = kDefaultSearchBudget;
};

/// The decomposition with (Delta_I, y) lexicographically least among all_decompositions.
PalDecomposition canonical_decompose(const ArtinGroup& g, const GroupElement& x,
                                     const OrderingHandle& ord, const CanonicalOptions& opts = {});

/// Peels Delta_{s, tau(s)} from both sides. Output has tau(y) = y and tau(Delta_I) = Delta_I.
/// Throws NotAPalindrome or NotTauInvariant.
PalDecomposition decompose_rev_tau(const ArtinGroup& g, const GroupElement& x);

struct SymmetrizeOptions {
  /// Also require the target set to be pairwise commuting.
  bool commuting_target = false;
  std::size_t budget = 100'000;
};

/// Breadth-first search over the moves "add s'" and "replace s by s'" (s, s' joined by an
/// odd label) for an equivalent decomposition with tau(I) = I.
PalDecomposition tau_symmetrize(const ArtinGroup& g, const PalDecomposition& d,
                                const SymmetrizeOptions& opts = {});

/// delta with x = Delta delta rev(delta), for rev(tau(x)) = x mapping to the image of Delta.
GroupElement delta_associated(const ArtinGroup& g, const GroupElement& x);
/// unpal(x) for pure, palindromic, tau-invariant x; the result is tau-invariant.
GroupElement pure_rev_tau_root(const ArtinGroup& g, const GroupElement& x);

/// Some y Delta_I rev(y) mapping to the involution w, with y taken among the reduced
/// words of `elements` (an enumeration of W) and I tried by increasing size.
std::optional<PalDecomposition> lift_involution(const ArtinGroup& g, const WElement& w,
                                                const std::vector<EnumeratedElement>& elements);

/// True iff the generators of I are pairwise non-adjacent.
bool check_singleton(const CoxeterMatrix& m, const GeneratorSet& subset);

}  // namespace artin
