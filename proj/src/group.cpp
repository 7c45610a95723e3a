#include "artin/group.hpp"

#include "artin/error.hpp"

namespace artin {

ArtinGroup::ArtinGroup(CoxeterMatrix matrix) : monoid_(std::move(matrix)) {
  if (!monoid_.finite_type()) {
    throw DomainError(DomainErrorKind::InfiniteType, "group elements need a finite-type matrix");
  }
  weyl_ = std::make_shared<const RootSystemRep>(monoid_.matrix());
  delta_squared_ = monoid_.delta_power(2);
  std::vector<Word> cof;
  for (int s = 1; s <= static_cast<int>(rank()); ++s) {
    auto q = monoid_.divides_left(Word{s}, delta_squared_);
    if (!q) throw DomainError(DomainErrorKind::Internal, "generator does not divide Delta^2");
    cof.push_back(std::move(*q));
  }
  cofactors_ = std::make_shared<const std::vector<Word>>(std::move(cof));
}

GroupElement ArtinGroup::make(std::size_t k, Word p) const {
  monoid_.check(p);
  while (k > 0 && p.size() >= delta_squared_.size()) {
    auto q = monoid_.divides_left(delta_squared_, p);
    if (!q) break;
    p = std::move(*q);
    --k;
  }
  return {k, std::move(p)};
}

GroupElement ArtinGroup::from_word(const Word& w) const {
  check_letters(w, rank());
  std::size_t k = 0;
  Word p;
  for (Letter x : free_reduce(w)) {
    if (x > 0) {
      p.push_back(x);
    } else {
      // s^-1 = Delta^-2 (s \ Delta^2), and Delta^-2 is central.
      ++k;
      const Word& c = (*cofactors_)[static_cast<std::size_t>(-x) - 1];
      p.insert(p.end(), c.begin(), c.end());
    }
  }
  return make(k, std::move(p));
}

GroupElement ArtinGroup::generator(int s) const {
  if (s < 1 || static_cast<std::size_t>(s) > rank()) {
    throw InvalidArgument("generator " + std::to_string(s) + " out of range");
  }
  return {0, Word{s}};
}

GroupElement ArtinGroup::delta_power(long e) const {
  if (e >= 0) return {0, monoid_.delta_power(static_cast<std::size_t>(e))};
  // Delta^-e with e odd is Delta^-2 * Delta; round the denominator up.
  const std::size_t n = static_cast<std::size_t>(-e);
  const std::size_t k = (n + 1) / 2;
  return make(k, monoid_.delta_power(2 * k - n));
}

GroupElement ArtinGroup::delta_subset(const GeneratorSet& subset) const {
  auto d = monoid_.delta(subset);
  if (!d) throw DomainError(DomainErrorKind::Internal, "Delta_I not found in finite type");
  return {0, *d};
}

GroupElement ArtinGroup::mult(const GroupElement& a, const GroupElement& b) const {
  return make(a.k + b.k, concat(a.p, b.p));
}

GroupElement ArtinGroup::inv(const GroupElement& a) const {
  if (a.p.empty()) return {0, monoid_.delta_power(2 * a.k)};
  // p q = Delta^(2m) gives p^-1 = Delta^(-2m) q; m = ceil(l(p)/2) always suffices.
  Word power;
  for (std::size_t m = 1;; ++m) {
    power.insert(power.end(), delta_squared_.begin(), delta_squared_.end());
    if (power.size() < a.p.size()) continue;
    auto q = monoid_.divides_left(a.p, power);
    if (!q) continue;
    if (m >= a.k) return make(m - a.k, std::move(*q));
    return make(0, concat(monoid_.delta_power(2 * (a.k - m)), *q));
  }
}

bool ArtinGroup::eq(const GroupElement& a, const GroupElement& b) const {
  // Normalised pairs with different k are never equal: Delta^(2(k'-k)) p = p' would
  // make Delta^2 a left divisor of p'.
  if (a.k != b.k) {
    GroupElement x = make(a.k, a.p);
    GroupElement y = make(b.k, b.p);
    if (x.k != y.k) return false;
    return monoid_.equals(x.p, y.p);
  }
  return monoid_.equals(a.p, b.p);
}

GroupElement ArtinGroup::rev(const GroupElement& a) const { return {a.k, reversed(a.p)}; }

GroupElement ArtinGroup::tau(const GroupElement& a) const { return {a.k, monoid_.apply_tau(a.p)}; }

bool ArtinGroup::is_pure(const GroupElement& a) const { return image(a).is_identity(); }

bool ArtinGroup::is_palindrome(const GroupElement& a) const { return eq(a, rev(a)); }

Word ArtinGroup::to_word(const GroupElement& a) const {
  Word out;
  const Word dinv = inverse_word(monoid_.delta());
  for (std::size_t i = 0; i < 2 * a.k; ++i) out.insert(out.end(), dinv.begin(), dinv.end());
  out.insert(out.end(), a.p.begin(), a.p.end());
  return out;
}

Word ArtinGroup::to_short_word(const GroupElement& a) const {
  Word den = monoid_.delta_power(2 * a.k);
  Word num = a.p;
  // (s u)^-1 (s v) = u^-1 v.
  while (!den.empty() && !num.empty()) {
    const std::uint64_t common = monoid_.starting_set(den).mask() & monoid_.starting_set(num).mask();
    if (common == 0) break;
    const Word s{GeneratorSet::from_mask(common).first()};
    den = *monoid_.divides_left(s, den);
    num = *monoid_.divides_left(s, num);
  }
  return concat(inverse_word(den), num);
}

std::string ArtinGroup::canonical_key(const GroupElement& a) const {
  GroupElement n = make(a.k, a.p);
  std::string key = std::to_string(n.k) + ":";
  for (const auto& head : monoid_.normal_form(n.p)) key += head.to_string();
  return key;
}

std::string ArtinGroup::format(const GroupElement& a) const {
  return "k=" + std::to_string(a.k) + " p=" + format_word(a.p);
}

}  // namespace artin
