#include "artin/palindromes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "artin/error.hpp"

namespace artin {

namespace {

// Delta^(2N) x with N the least even number >= k, so that Delta^N is central.
struct PositiveCore {
  std::size_t n = 0;
  Word z;
};

PositiveCore positive_core(const ArtinGroup& g, const GroupElement& x) {
  GroupElement nx = g.make(x.k, x.p);
  PositiveCore core;
  core.n = nx.k + nx.k % 2;
  core.z = concat(g.monoid().delta_power(2 * (core.n - nx.k)), nx.p);
  return core;
}

// Delta^-N y for even N.
GroupElement shift(const ArtinGroup& g, std::size_t n, Word y) { return g.make(n / 2, std::move(y)); }

void require_palindrome(const ArtinGroup& g, const GroupElement& x) {
  if (!g.is_palindrome(x)) {
    throw DomainError(DomainErrorKind::NotAPalindrome, "rev(x) differs from x");
  }
}

Word delta_of(const ArtinMonoid& m, const GeneratorSet& subset) {
  auto d = m.delta(subset);
  if (!d) throw DomainError(DomainErrorKind::Internal, "Delta_I not found");
  return std::move(*d);
}

// a = s b s; nullopt when s is not both a left and a right divisor in that way.
std::optional<Word> peel(const ArtinMonoid& m, const Word& a, int s) {
  auto q = m.divides_left(Word{s}, a);
  if (!q) return std::nullopt;
  return m.divides_right(Word{s}, *q);
}

void verify(const ArtinGroup& g, const PalDecomposition& d, const GroupElement& x,
            const char* what) {
  if (!reconstructs(g, d, x)) {
    throw DomainError(DomainErrorKind::Internal, std::string(what) + " does not reconstruct x");
  }
}

}  // namespace

GroupElement pal(const ArtinGroup& g, const GroupElement& x) { return g.mult(x, g.rev(x)); }

GroupElement reconstruct(const ArtinGroup& g, const PalDecomposition& d) {
  return g.mult(g.mult(d.y, g.delta_subset(d.subset)), g.rev(d.y));
}

bool reconstructs(const ArtinGroup& g, const PalDecomposition& d, const GroupElement& x) {
  return g.eq(reconstruct(g, d), x);
}

PalDecomposition decompose(const ArtinGroup& g, const GroupElement& x) {
  require_palindrome(g, x);
  const ArtinMonoid& m = g.monoid();
  PositiveCore core = positive_core(g, x);
  Word y;
  Word a = std::move(core.z);
  while (true) {
    const GeneratorSet start = m.starting_set(a);
    const Word d = delta_of(m, start);
    auto tail = m.divides_left(d, a);
    if (!tail) throw DomainError(DomainErrorKind::Internal, "Delta of S(x) does not divide x");
    if (tail->empty()) {
      PalDecomposition out{shift(g, core.n, std::move(y)), start};
      verify(g, out, x, "decompose");
      return out;
    }
    const int s = m.finishing_set(*tail).first();
    auto inner = peel(m, a, s);
    if (!inner) throw DomainError(DomainErrorKind::Internal, "palindrome is not s a s");
    y.push_back(s);
    a = std::move(*inner);
  }
}

GroupElement unpal(const ArtinGroup& g, const GroupElement& x) {
  PalDecomposition d = decompose(g, x);
  if (!d.subset.empty()) {
    throw DomainError(DomainErrorKind::NotPure,
                      "decomposition ends at Delta_" + d.subset.to_string());
  }
  if (!g.eq(pal(g, d.y), x)) throw DomainError(DomainErrorKind::Internal, "pal(unpal(x)) != x");
  return d.y;
}

namespace {

struct Found {
  Word y;
  GeneratorSet subset;
};

class DecompositionSearch {
 public:
  DecompositionSearch(const ArtinMonoid& m, std::size_t budget) : m_(m), budget_(budget) {}

  const std::vector<Found>& run(const Word& a) {
    std::string key = key_of(a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++work_ > budget_) {
      throw DomainError(DomainErrorKind::SearchBudgetExceeded,
                        "decomposition search exceeded " + std::to_string(budget_) + " steps");
    }
    std::vector<Found> out;
    std::set<std::pair<std::uint64_t, std::string>> seen;
    const GeneratorSet start = m_.starting_set(a);
    auto add = [&](Word y, GeneratorSet subset) {
      if (seen.emplace(subset.mask(), key_of(y)).second) out.push_back({std::move(y), subset});
    };
    if (m_.equals(a, delta_of(m_, start))) add({}, start);
    for (int s : start.indices()) {
      auto inner = peel(m_, a, s);
      if (!inner) continue;
      // Copy: the recursive call may rehash memo_.
      const std::vector<Found> sub = run(*inner);
      for (const Found& f : sub) {
        Word y{s};
        y.insert(y.end(), f.y.begin(), f.y.end());
        add(std::move(y), f.subset);
      }
      work_ += sub.size();
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  std::string key_of(const Word& w) const {
    std::string key;
    for (const auto& head : m_.normal_form(w)) key += head.to_string();
    return key;
  }

  const ArtinMonoid& m_;
  std::size_t budget_;
  std::size_t work_ = 0;
  std::unordered_map<std::string, std::vector<Found>> memo_;
};

}  // namespace

std::vector<PalDecomposition> all_decompositions(const ArtinGroup& g, const GroupElement& x,
                                                 std::size_t budget) {
  require_palindrome(g, x);
  PositiveCore core = positive_core(g, x);
  DecompositionSearch search(g.monoid(), budget);
  std::vector<PalDecomposition> out;
  for (const Found& f : search.run(core.z)) out.push_back({shift(g, core.n, f.y), f.subset});
  return out;
}

PalDecomposition canonical_decompose(const ArtinGroup& g, const GroupElement& x,
                                     const OrderingHandle& ord, const CanonicalOptions& opts) {
  require_palindrome(g, x);
  PositiveCore core = positive_core(g, x);
  DecompositionSearch search(g.monoid(), opts.budget);
  const std::vector<Found>& found = search.run(core.z);
  if (found.empty()) throw DomainError(DomainErrorKind::Internal, "no decomposition found");

  const ArtinMonoid& m = g.monoid();
  // y is compared inside the positive core; left-invariance makes this the same as
  // comparing Delta^-N y.
  auto less = [&](const Found& a, const Found& b) {
    Comparison c = Comparison::Equal;
    if (a.subset != b.subset) {
      c = ord.compare(delta_of(m, a.subset), delta_of(m, b.subset));
      if (opts.opposite) c = c == Comparison::Less ? Comparison::Greater : Comparison::Less;
    } else {
      c = ord.compare(a.y, b.y);
    }
    if (c == Comparison::Equal) {
      throw DomainError(DomainErrorKind::Internal, "two distinct decompositions compare equal");
    }
    return c == Comparison::Less;
  };
  const Found* best = &found.front();
  for (const Found& f : found) {
    if (&f != best && less(f, *best)) best = &f;
  }
  PalDecomposition out{shift(g, core.n, best->y), best->subset};
  verify(g, out, x, "canonical_decompose");
  return out;
}

PalDecomposition decompose_rev_tau(const ArtinGroup& g, const GroupElement& x) {
  require_palindrome(g, x);
  if (!g.eq(g.tau(x), x)) throw DomainError(DomainErrorKind::NotTauInvariant, "tau(x) differs from x");
  const ArtinMonoid& m = g.monoid();
  const auto& tau = m.tau_perm();
  PositiveCore core = positive_core(g, x);
  Word y;
  Word a = std::move(core.z);
  while (true) {
    const GeneratorSet start = m.starting_set(a);
    auto tail = m.divides_left(delta_of(m, start), a);
    if (!tail) throw DomainError(DomainErrorKind::Internal, "Delta of S(x) does not divide x");
    if (tail->empty()) {
      PalDecomposition out{shift(g, core.n, std::move(y)), start};
      verify(g, out, x, "decompose_rev_tau");
      if (!g.eq(g.tau(out.y), out.y) ||
          !g.eq(g.tau(g.delta_subset(out.subset)), g.delta_subset(out.subset))) {
        throw DomainError(DomainErrorKind::Internal, "decompose_rev_tau lost tau-invariance");
      }
      return out;
    }
    const int s = m.finishing_set(*tail).first();
    const Word pair = delta_of(m, GeneratorSet{s, tau[s]});
    auto left = m.divides_left(pair, a);
    auto inner = left ? m.divides_right(pair, *left) : std::nullopt;
    if (!inner) throw DomainError(DomainErrorKind::Internal, "cannot peel Delta_{s,tau(s)}");
    y.insert(y.end(), pair.begin(), pair.end());
    a = std::move(*inner);
  }
}

std::optional<PalDecomposition> lift_involution(const ArtinGroup& g, const WElement& w,
                                                const std::vector<EnumeratedElement>& elements) {
  const std::size_t n = g.rank();
  std::vector<GeneratorSet> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    subsets.push_back(GeneratorSet::from_mask(mask));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const GeneratorSet& a, const GeneratorSet& b) { return a.size() < b.size(); });
  for (const GeneratorSet& subset : subsets) {
    const WElement d = g.image(g.delta_subset(subset));
    for (const EnumeratedElement& e : elements) {
      // rev and inversion agree in W.
      if (e.element * d * e.element.inverse() == w) {
        return PalDecomposition{GroupElement{0, e.witness}, subset};
      }
    }
  }
  return std::nullopt;
}

bool check_singleton(const CoxeterMatrix& m, const GeneratorSet& subset) {
  const auto idx = subset.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (m.adjacent(idx[i], idx[j])) return false;
    }
  }
  return true;
}

namespace {

bool commutes_with_all(const CoxeterMatrix& m, int s, const GeneratorSet& set) {
  for (int t : set.indices()) {
    if (!m.commute(s, t)) return false;
  }
  return true;
}

// c with Delta_{s,s'} = c t rev(c), t in {s, s'}, for an odd label 2k+1: the alternating
// word of odd length is a palindrome whose middle letter is its first letter when k is
// even and the other letter when k is odd.
Word conjugator(const CoxeterMatrix& m, int s, int s2, int t) {
  const int k = (m.m(s, s2) - 1) / 2;
  const int other = t == s ? s2 : s;
  const int first = k % 2 == 0 ? t : other;
  return alternating(first, first == s ? s2 : s, static_cast<std::size_t>(k));
}

GeneratorSet apply_perm(const std::vector<int>& tau, const GeneratorSet& set) {
  GeneratorSet out;
  for (int s : set.indices()) out.insert(tau[s]);
  return out;
}

}  // namespace

PalDecomposition tau_symmetrize(const ArtinGroup& g, const PalDecomposition& d,
                                const SymmetrizeOptions& opts) {
  const CoxeterMatrix& m = g.matrix();
  if (!check_singleton(m, d.subset)) {
    throw DomainError(DomainErrorKind::PreconditionFailed, "I is not pairwise commuting");
  }
  if (g.monoid().tau_is_trivial()) return d;
  for (int i = 1; i <= static_cast<int>(g.rank()); ++i) {
    for (int j = i + 1; j <= static_cast<int>(g.rank()); ++j) {
      const int label = m.m(i, j);
      if (label != 2 && (label == kInfinity || label % 2 == 0)) {
        throw DomainError(DomainErrorKind::PreconditionFailed,
                          "tau is nontrivial but the diagram has an even label");
      }
    }
  }
  const auto& tau = g.monoid().tau_perm();
  const GroupElement x = reconstruct(g, d);
  auto is_target = [&](const GeneratorSet& j) {
    return apply_perm(tau, j) == j && (!opts.commuting_target || check_singleton(m, j));
  };

  std::deque<PalDecomposition> queue{d};
  std::set<std::uint64_t> visited{d.subset.mask()};
  const int n = static_cast<int>(g.rank());
  while (!queue.empty()) {
    PalDecomposition cur = std::move(queue.front());
    queue.pop_front();
    if (is_target(cur.subset)) {
      verify(g, cur, x, "tau_symmetrize");
      return cur;
    }
    for (int s : cur.subset.indices()) {
      GeneratorSet rest = cur.subset;
      rest.erase(s);
      if (!commutes_with_all(m, s, rest)) continue;
      for (int s2 = 1; s2 <= n; ++s2) {
        const int label = m.m(s, s2);
        if (s2 == s || cur.subset.contains(s2) || label == 2 || label % 2 == 0) continue;
        if (!commutes_with_all(m, s2, rest)) continue;
        const GroupElement back = g.inv(GroupElement{0, conjugator(m, s, s2, s)});
        // (A): Delta_J = c_s^-1 Delta_{J + s'} rev(c_s^-1).
        GeneratorSet added = cur.subset;
        added.insert(s2);
        // (B): Delta_J = c_s^-1 c_s' Delta_{J - s + s'} rev(c_s^-1 c_s').
        GeneratorSet replaced = rest;
        replaced.insert(s2);
        const std::pair<GeneratorSet, GroupElement> moves[] = {
            {added, g.mult(cur.y, back)},
            {replaced, g.mult(g.mult(cur.y, back), GroupElement{0, conjugator(m, s, s2, s2)})},
        };
        for (const auto& [subset, y] : moves) {
          if (!visited.insert(subset.mask()).second) continue;
          if (visited.size() > opts.budget) {
            throw DomainError(DomainErrorKind::SearchBudgetExceeded, "tau_symmetrize budget");
          }
          queue.push_back({y, subset});
        }
      }
    }
  }
  throw DomainError(DomainErrorKind::NoTarget, "no tau-invariant subset is reachable");
}

GroupElement delta_associated(const ArtinGroup& g, const GroupElement& x) {
  if (!g.eq(g.rev(g.tau(x)), x)) {
    throw DomainError(DomainErrorKind::PreconditionFailed, "rev(tau(x)) differs from x");
  }
  const GroupElement delta = g.delta_power(1);
  if (!(g.image(x) == g.image(delta))) {
    throw DomainError(DomainErrorKind::PreconditionFailed, "x and Delta differ in W");
  }
  GroupElement out;
  try {
    out = unpal(g, g.mult(g.delta_power(-1), x));
  } catch (const DomainError& e) {
    throw DomainError(DomainErrorKind::Internal,
                      std::string("Delta^-1 x should be a pure palindrome: ") + e.what());
  }
  if (!g.eq(g.mult(delta, pal(g, out)), x)) {
    throw DomainError(DomainErrorKind::Internal, "x != Delta delta rev(delta)");
  }
  return out;
}

GroupElement pure_rev_tau_root(const ArtinGroup& g, const GroupElement& x) {
  if (!g.is_pure(x)) throw DomainError(DomainErrorKind::NotPure, "x is not pure");
  require_palindrome(g, x);
  if (!g.eq(g.tau(x), x)) throw DomainError(DomainErrorKind::NotTauInvariant, "tau(x) differs from x");
  GroupElement out = unpal(g, x);
  if (!g.eq(g.tau(out), out)) throw DomainError(DomainErrorKind::Internal, "tau(delta) != delta");
  return out;
}

}  // namespace artin
