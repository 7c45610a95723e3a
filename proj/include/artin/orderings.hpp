#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/group.hpp"
#include "artin/word.hpp"

namespace artin {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class Comparison { Less, Equal, Greater };

const char* to_string(Sign s);
const char* to_string(Comparison c);
inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

/// Counters from one run of handle reduction.
struct HandleStats {
  std::size_t reductions = 0;
  std::size_t max_length = 0;
};

inline constexpr std::size_t kDefaultHandleCap = 1'000'000;

/// Handle reduction to a handle-free word (letters +-i stand for sigma_i^{+-1}).
/// Throws DomainError(BudgetExceeded) after `cap` reductions.
Word handle_reduce(const Word& w, HandleStats* stats = nullptr,
                   std::size_t cap = kDefaultHandleCap);

/// Dehornoy sign of a braid word on `strands` strands (letters in +-1..strands-1).
Sign dehornoy_sign(const Word& w, std::size_t strands, HandleStats* stats = nullptr,
                   std::size_t cap = kDefaultHandleCap);

/// Truncated series in non-commuting indeterminates X_1..X_n with integer coefficients.
/// Monomials are index sequences; map order is irrelevant, see `leading_term`.
class SeriesTrunc {
 public:
  using Monomial = std::vector<std::uint8_t>;

  explicit SeriesTrunc(std::size_t degree);
  static SeriesTrunc one(std::size_t degree);
  /// mu(x_j^{+-1}) truncated.
  static SeriesTrunc magnus_letter(Letter x, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Monomial& m) const;

  friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b);
  SeriesTrunc& operator*=(const SeriesTrunc& b);

  /// First nonzero term of (this - 1) in graded lexicographic order.
  std::optional<std::pair<Monomial, std::int64_t>> leading_term() const;

 private:
  std::size_t degree_;
  std::map<Monomial, std::int64_t> terms_;
};

/// Magnus series mu(w) truncated at `degree`.
SeriesTrunc magnus_series(const Word& w, std::size_t degree);

/// Sign in the Magnus ordering of the free group on the letters of w.
Sign magnus_sign(const Word& w);

/// A left-invariant order given by its sign function on signed words.
class OrderingHandle {
 public:
  OrderingHandle(std::string name, std::function<Sign(const Word&)> sign)
      : name_(std::move(name)), sign_(std::move(sign)) {}

  const std::string& name() const { return name_; }
  Sign sign(const Word& w) const { return sign_(w); }
  /// From the sign of x^-1 y.
  Comparison compare(const Word& x, const Word& y) const;

 private:
  std::string name_;
  std::function<Sign(const Word&)> sign_;
};

OrderingHandle dehornoy_ordering(std::size_t strands);
OrderingHandle magnus_ordering();

/// Image of a word of A(B_n) in B_{n+1}: beta_j -> sigma_j (j < n), beta_n -> sigma_n^2.
Word typeB_embed(const Word& w, std::size_t n);
/// Dehornoy order pulled back along typeB_embed.
OrderingHandle typeB_order(std::size_t n);

/// Order on an extension 1 -> H -> G -> K -> 1: the sign of p(x) in K, or, when p(x) is
/// trivial, the kernel sign of the coordinates of x in H.
OrderingHandle extension_order(std::string name, std::function<Word(const Word&)> project,
                               OrderingHandle base,
                               std::function<Word(const Word&)> kernel_coordinates,
                               OrderingHandle kernel);

/// Order on group elements of `group` suitable for canonical decompositions: Dehornoy
/// for type A_n, typeB_order for type B_n. Throws InvalidArgument for other names.
OrderingHandle group_ordering(const ArtinGroup& group, const std::string& name);
Comparison compare_elements(const ArtinGroup& group, const OrderingHandle& ord,
                            const GroupElement& x, const GroupElement& y);

struct SppcReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::optional<Word> witness;  ///< first violating sample
};

/// Counts samples x with sign(x) != sign(phi(x)).
SppcReport sppc_check(const OrderingHandle& ord, const std::function<Word(const Word&)>& phi,
                      const std::function<Word()>& sampler, std::size_t samples);

}  // namespace artin
