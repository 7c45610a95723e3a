#pragma once

#include <cstddef>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/scalar.hpp"
#include "artin/word.hpp"

namespace artin {

/// An element of W as a permutation of a finite set the group acts on faithfully.
class WElement {
 public:
  WElement() = default;
  explicit WElement(std::vector<int> perm) : perm_(std::move(perm)) {}

  static WElement identity(std::size_t degree);

  const std::vector<int>& permutation() const { return perm_; }
  std::size_t degree() const { return perm_.size(); }

  /// Composition: (a * b)(i) = a(b(i)).
  friend WElement operator*(const WElement& a, const WElement& b);
  WElement inverse() const;

  bool is_identity() const;
  /// Order exactly two.
  bool is_involution() const;

  friend bool operator==(const WElement&, const WElement&) = default;
  friend auto operator<=>(const WElement&, const WElement&) = default;

 private:
  std::vector<int> perm_;
};

struct WElementHash {
  std::size_t operator()(const WElement& e) const noexcept;
};

/// Faithful permutation representation of a finite Coxeter group.
///
/// Most types act on their root system, with coordinates in Z or Z[phi] in the basis of
/// simple roots. Dihedral types I2(m) outside the crystallographic/golden cases act on
/// the m vertices of a regular polygon instead, in which case `roots()` is empty.
class RootSystemRep {
 public:
  explicit RootSystemRep(CoxeterMatrix matrix);

  const CoxeterMatrix& matrix() const { return matrix_; }
  const std::vector<std::vector<Scalar>>& roots() const { return roots_; }
  std::size_t degree() const { return reflections_.front().degree(); }
  /// Simple reflection r_s, 1-based.
  const WElement& reflection(int s) const { return reflections_[s - 1]; }

  /// Image of a signed word; s and s^-1 map to the same reflection.
  WElement image(const Word& w) const;
  WElement identity() const { return WElement::identity(degree()); }

 private:
  CoxeterMatrix matrix_;
  std::vector<std::vector<Scalar>> roots_;
  std::vector<WElement> reflections_;
};

struct EnumeratedElement {
  WElement element;
  Word witness;  ///< a reduced word, found by breadth-first search
};

/// Every element of W, in breadth-first order. Throws DomainError(BudgetExceeded) past `cap`.
std::vector<EnumeratedElement> enumerate_group(const RootSystemRep& rep, std::size_t cap);

/// Order of (r_i r_j) computed on permutations; used to verify the Coxeter relations.
std::size_t permutation_order(const WElement& e);

}  // namespace artin
