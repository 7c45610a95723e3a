#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "artin/monoid.hpp"
#include "artin/weyl.hpp"
#include "artin/word.hpp"

namespace artin {

/// Delta^(-2k) p with p positive. Values built by ArtinGroup are normalised:
/// k = 0 or Delta^2 does not left-divide p, which makes (k, p) unique up to monoid
/// equality of p.
struct GroupElement {
  std::size_t k = 0;
  Word p;
};

/// Context for computations in a finite-type Artin group. Copies share caches.
class ArtinGroup {
 public:
  /// Throws DomainError(InfiniteType) outside finite type.
  explicit ArtinGroup(CoxeterMatrix matrix);

  const CoxeterMatrix& matrix() const { return monoid_.matrix(); }
  const ArtinMonoid& monoid() const { return monoid_; }
  const RootSystemRep& weyl() const { return *weyl_; }
  std::size_t rank() const { return monoid_.rank(); }

  GroupElement identity() const { return {}; }
  /// Reduces (k, p) to normal form.
  GroupElement make(std::size_t k, Word p) const;
  GroupElement from_word(const Word& w) const;
  GroupElement generator(int s) const;
  /// Delta^e for any integer e.
  GroupElement delta_power(long e) const;
  GroupElement delta_subset(const GeneratorSet& subset) const;

  GroupElement mult(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  bool eq(const GroupElement& a, const GroupElement& b) const;
  bool is_identity(const GroupElement& a) const { return a.k == 0 && a.p.empty(); }

  GroupElement rev(const GroupElement& a) const;
  GroupElement tau(const GroupElement& a) const;
  bool is_pure(const GroupElement& a) const;
  bool is_palindrome(const GroupElement& a) const;
  /// True iff a is positive, i.e. k = 0 after normalisation.
  bool is_positive(const GroupElement& a) const { return a.k == 0; }

  WElement image(const GroupElement& a) const { return weyl_->image(a.p); }

  /// A signed word for a: 2k copies of Delta^-1 followed by p.
  Word to_word(const GroupElement& a) const;
  /// a^-1 b with a = Delta^(2k), b = p after cancelling common left divisors.
  Word to_short_word(const GroupElement& a) const;
  /// Key that is equal for eq-equal elements: k and the head sequence of p.
  std::string canonical_key(const GroupElement& a) const;
  /// "k=1 p=1 2 1" style rendering.
  std::string format(const GroupElement& a) const;

 private:
  ArtinMonoid monoid_;
  std::shared_ptr<const RootSystemRep> weyl_;
  std::shared_ptr<const std::vector<Word>> cofactors_;  // s \ Delta^2, index s - 1
  Word delta_squared_;
};

}  // namespace artin
