#pragma once

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "artin/word.hpp"

namespace artin {

/// Coxeter label meaning "no relation".
inline constexpr int kInfinity = INT_MAX;

/// A subset of the generators {1..n}, n <= 64.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<int> indices);

  static GeneratorSet from_mask(std::uint64_t mask) {
    GeneratorSet s;
    s.mask_ = mask;
    return s;
  }
  /// Validates range and rejects duplicates.
  static GeneratorSet from_indices(const std::vector<int>& indices, std::size_t rank);
  static GeneratorSet all(std::size_t rank);

  bool contains(int s) const { return s >= 1 && s <= 64 && (mask_ >> (s - 1)) & 1u; }
  void insert(int s) { mask_ |= std::uint64_t{1} << (s - 1); }
  void erase(int s) { mask_ &= ~(std::uint64_t{1} << (s - 1)); }
  bool empty() const { return mask_ == 0; }
  std::size_t size() const;
  std::uint64_t mask() const { return mask_; }
  bool is_subset_of(const GeneratorSet& other) const { return (mask_ & ~other.mask_) == 0; }

  /// Sorted indices.
  std::vector<int> indices() const;
  /// Smallest index; the set must be nonempty.
  int first() const;

  std::string to_string() const;  // "{1,3}"

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
  friend auto operator<=>(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Symmetric Coxeter matrix with labels in {1,2,3,...} and kInfinity.
class CoxeterMatrix {
 public:
  /// Builds and validates. `require_connected` is relaxed only for parabolic restrictions.
  CoxeterMatrix(std::vector<std::vector<int>> entries, std::string name = {},
                bool require_connected = true);

  std::size_t rank() const { return entries_.size(); }
  /// Label m_ij, 1-based indices.
  int m(int i, int j) const { return entries_[i - 1][j - 1]; }
  bool adjacent(int i, int j) const { return i != j && m(i, j) >= 3; }
  bool commute(int i, int j) const { return i == j || m(i, j) == 2; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  bool is_connected() const;

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<std::vector<int>> entries_;
  std::string name_;
};

/// Parses the line-oriented matrix format ("rank N", "m i j v", "# comment").
CoxeterMatrix parse_matrix(std::string_view text);
/// Inverse of parse_matrix; only labels different from 2 are written.
std::string serialize_matrix(const CoxeterMatrix& m);

/// Standard finite-type diagrams. `family` is one of A,B,D,E6,E7,E8,F4,H3,H4,I2;
/// `param` is the rank for A/B/D and the label m for I2 (ignored elsewhere).
CoxeterMatrix builtin(std::string_view family, int param = 0);
/// Accepts names like "A3", "B2", "D4", "E8", "F4", "H3", "I2(7)", "I2_7".
CoxeterMatrix builtin_from_name(std::string_view name);

/// Diagram isomorphism against the finite-type catalogue.
bool is_finite_type(const CoxeterMatrix& m);

/// Restriction to the rows/columns in I (renumbered 1..|I| in increasing order).
CoxeterMatrix sub_matrix(const CoxeterMatrix& m, const GeneratorSet& subset);

/// w_k(a,b) for k >= 2: alternating word a b a b ... of length k.
Word w_word(int a, int b, int k);
/// Alternating word of any length k >= 0 starting with a.
Word alternating(int a, int b, int k);

/// Size of the largest pairwise-commuting generator subset.
std::size_t max_commuting_subset_size(const CoxeterMatrix& m);

}  // namespace artin
