#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin {

/// One rewrite performed by left extraction, as inclusive 0-based positions of the
/// rewritten factor in the word being processed.
struct RewriteEvent {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Instrumentation for left extraction.
struct ExtractTrace {
  std::size_t steps = 0;        ///< commutations plus relation applications
  std::size_t max_depth = 0;    ///< deepest recursive call
  std::vector<RewriteEvent> events;
};

enum class LcmStatus {
  Found,
  NoCommonMultiple,  ///< reversing met a pair with label infinity
  BudgetExceeded,    ///< gave up; existence undecided
};

struct LcmResult {
  LcmStatus status = LcmStatus::NoCommonMultiple;
  Word word;  ///< the right lcm when status == Found
};

/// The Artin monoid of a Coxeter matrix, acting on positive words.
///
/// All members are const and safe to call concurrently. Fundamental elements are
/// memoised in a mutex-guarded table shared between copies.
class ArtinMonoid {
 public:
  explicit ArtinMonoid(CoxeterMatrix matrix);

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  bool finite_type() const { return finite_type_; }

  /// Throws InvalidArgument unless w is a positive word over 1..rank.
  void check(const Word& w) const;

  static Word rev(const Word& w) { return reversed(w); }

  /// Jacquemard left extraction: some w'' with w = s w'' in the monoid, or nullopt.
  std::optional<Word> left_extract(const Word& w, int s, ExtractTrace* trace = nullptr) const;
  /// Mirror image: some w'' with w = w'' s.
  std::optional<Word> right_extract(const Word& w, int s) const;

  /// Letters strictly left of 1-based `position` whose label with w[position] is >= 3.
  std::size_t blocking_left_index(const Word& w, std::size_t position) const;

  GeneratorSet starting_set(const Word& w) const;
  GeneratorSet finishing_set(const Word& w) const;

  bool equals(const Word& u, const Word& v) const;
  /// The quotient u\v (v = u w), if u left-divides v.
  std::optional<Word> divides_left(const Word& u, const Word& v) const;
  /// The quotient v/u (v = w u), if u right-divides v.
  std::optional<Word> divides_right(const Word& u, const Word& v) const;

  /// Right lcm by word reversing; budget bounds the lcm length in letters.
  LcmResult right_lcm(const Word& u, const Word& v, std::optional<std::size_t> budget = {}) const;
  std::size_t default_lcm_budget(const Word& u, const Word& v) const;

  /// Fundamental element of the parabolic generated by I (empty word for I empty).
  LcmResult delta_result(const GeneratorSet& subset, std::optional<std::size_t> budget = {}) const;
  /// Memoised Delta_I with the default budget; nullopt when not found.
  std::optional<Word> delta(const GeneratorSet& subset) const;

  /// Head sequence I_1, I_2, ... with w = Delta_{I_1} Delta_{I_2} ...
  std::vector<GeneratorSet> normal_form(const Word& w) const;

  /// Delta_S; throws DomainError(InfiniteType) outside finite type.
  const Word& delta() const;
  /// Delta_S^k as a word.
  Word delta_power(std::size_t k) const;
  /// tau(s) for s = 1..rank (index 0 unused); involutive diagram automorphism.
  const std::vector<int>& tau_perm() const;
  Word apply_tau(const Word& w) const;
  bool tau_is_trivial() const;

 private:
  struct Cache;

  bool extract_at(Word& w, std::size_t from, int s, ExtractTrace* trace,
                  std::size_t depth) const;

  CoxeterMatrix matrix_;
  bool finite_type_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace artin
