#include "artin/orderings.hpp"

#include <algorithm>
#include <cstdlib>

#include "artin/error.hpp"

namespace artin {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "NEGATIVE";
    case Sign::Zero: return "ZERO";
    case Sign::Positive: return "POSITIVE";
  }
  return "?";
}

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "LESS";
    case Comparison::Equal: return "EQUAL";
    case Comparison::Greater: return "GREATER";
  }
  return "?";
}

namespace {

// Leftmost-ending handle sigma_i^e u sigma_i^-e: u has no sigma_i and no sigma_{i-1}.
// Ending first means u contains no handle at all, so the handle is permitted.
bool find_handle(const Word& w, std::size_t& left, std::size_t& right) {
  int top = 0;
  for (Letter x : w) top = std::max(top, std::abs(x));
  std::vector<long> last(static_cast<std::size_t>(top) + 2, -1);
  for (std::size_t r = 0; r < w.size(); ++r) {
    const int i = std::abs(w[r]);
    const long l = last[static_cast<std::size_t>(i)];
    if (l >= 0 && w[static_cast<std::size_t>(l)] == -w[r] &&
        last[static_cast<std::size_t>(i - 1)] < l) {
      left = static_cast<std::size_t>(l);
      right = r;
      return true;
    }
    last[static_cast<std::size_t>(i)] = static_cast<long>(r);
  }
  return false;
}

}  // namespace

Word handle_reduce(const Word& w, HandleStats* stats, std::size_t cap) {
  Word cur = free_reduce(w);
  std::size_t count = 0;
  std::size_t longest = cur.size();
  std::size_t l = 0, r = 0;
  while (find_handle(cur, l, r)) {
    if (++count > cap) {
      throw DomainError(DomainErrorKind::BudgetExceeded,
                        "handle reduction exceeded " + std::to_string(cap) + " steps");
    }
    const int i = std::abs(cur[l]);
    const int e = cur[l] > 0 ? 1 : -1;
    Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(l));
    for (std::size_t p = l + 1; p < r; ++p) {
      const Letter y = cur[p];
      if (std::abs(y) == i + 1) {
        const int d = y > 0 ? 1 : -1;
        next.push_back(-e * (i + 1));
        next.push_back(d * i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(y);
      }
    }
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(r) + 1, cur.end());
    cur = free_reduce(next);
    longest = std::max(longest, cur.size());
  }
  if (stats) {
    stats->reductions += count;
    stats->max_length = std::max(stats->max_length, longest);
  }
  return cur;
}

Sign dehornoy_sign(const Word& w, std::size_t strands, HandleStats* stats, std::size_t cap) {
  if (strands < 1) throw InvalidArgument("strand count must be positive");
  check_letters(w, strands - 1);
  Word reduced = handle_reduce(w, stats, cap);
  if (reduced.empty()) return Sign::Zero;
  Letter main = reduced.front();
  for (Letter x : reduced) {
    if (std::abs(x) < std::abs(main)) main = x;
  }
  return main > 0 ? Sign::Positive : Sign::Negative;
}

SeriesTrunc::SeriesTrunc(std::size_t degree) : degree_(degree) {}

SeriesTrunc SeriesTrunc::one(std::size_t degree) {
  SeriesTrunc s(degree);
  s.terms_[{}] = 1;
  return s;
}

SeriesTrunc SeriesTrunc::magnus_letter(Letter x, std::size_t degree) {
  if (x == 0 || std::abs(x) > 255) throw InvalidArgument("letter out of range for series");
  SeriesTrunc s = one(degree);
  const auto j = static_cast<std::uint8_t>(std::abs(x));
  if (x > 0) {
    if (degree >= 1) s.terms_.emplace(Monomial(1, j), 1);
    return s;
  }
  // (1 + X)^-1 = 1 - X + X^2 - ...
  Monomial m;
  for (std::size_t d = 1; d <= degree; ++d) {
    m.push_back(j);
    s.terms_[m] = d % 2 == 0 ? 1 : -1;
  }
  return s;
}

std::int64_t SeriesTrunc::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
  SeriesTrunc out(std::min(a.degree_, b.degree_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.size() + mb.size() > out.degree_) continue;
      SeriesTrunc::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::int64_t prod = 0;
      std::int64_t& slot = out.terms_[m];
      if (__builtin_mul_overflow(ca, cb, &prod) || __builtin_add_overflow(slot, prod, &slot)) {
        throw DomainError(DomainErrorKind::BudgetExceeded, "series coefficient overflow");
      }
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

SeriesTrunc& SeriesTrunc::operator*=(const SeriesTrunc& b) {
  *this = *this * b;
  return *this;
}

std::optional<std::pair<SeriesTrunc::Monomial, std::int64_t>> SeriesTrunc::leading_term() const {
  std::optional<std::pair<Monomial, std::int64_t>> best;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) continue;
    if (!best || m.size() < best->first.size() ||
        (m.size() == best->first.size() && m < best->first)) {
      best = {m, c};
    }
  }
  return best;
}

SeriesTrunc magnus_series(const Word& w, std::size_t degree) {
  SeriesTrunc s = SeriesTrunc::one(degree);
  for (Letter x : w) s *= SeriesTrunc::magnus_letter(x, degree);
  return s;
}

Sign magnus_sign(const Word& w) {
  const Word r = free_reduce(w);
  if (r.empty()) return Sign::Zero;
  // One monomial per syllable has coefficient the product of the syllable exponents,
  // so a nonzero term appears by degree = number of syllables.
  std::size_t syllables = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i == 0 || std::abs(r[i]) != std::abs(r[i - 1])) ++syllables;
  }
  for (std::size_t d = 1;; d = std::min(2 * d, syllables)) {
    auto lead = magnus_series(r, d).leading_term();
    if (lead) return lead->second > 0 ? Sign::Positive : Sign::Negative;
    if (d >= syllables) {
      throw DomainError(DomainErrorKind::Internal, "Magnus series of a reduced word is 1");
    }
  }
}

Comparison OrderingHandle::compare(const Word& x, const Word& y) const {
  switch (sign(concat(inverse_word(x), y))) {
    case Sign::Positive: return Comparison::Less;
    case Sign::Zero: return Comparison::Equal;
    case Sign::Negative: break;
  }
  return Comparison::Greater;
}

OrderingHandle dehornoy_ordering(std::size_t strands) {
  return OrderingHandle("dehornoy", [strands](const Word& w) { return dehornoy_sign(w, strands); });
}

OrderingHandle magnus_ordering() { return OrderingHandle("magnus", magnus_sign); }

Word typeB_embed(const Word& w, std::size_t n) {
  check_letters(w, n);
  const int last = static_cast<int>(n);
  Word out;
  for (Letter x : w) {
    out.push_back(x);
    if (std::abs(x) == last) out.push_back(x);
  }
  return out;
}

OrderingHandle typeB_order(std::size_t n) {
  if (n < 2) throw InvalidArgument("typeB_order needs n >= 2");
  return OrderingHandle("typeb", [n](const Word& w) {
    return dehornoy_sign(typeB_embed(w, n), n + 1);
  });
}

OrderingHandle extension_order(std::string name, std::function<Word(const Word&)> project,
                               OrderingHandle base,
                               std::function<Word(const Word&)> kernel_coordinates,
                               OrderingHandle kernel) {
  return OrderingHandle(
      std::move(name),
      [project = std::move(project), base = std::move(base),
       coords = std::move(kernel_coordinates), kernel = std::move(kernel)](const Word& w) {
        Sign s = base.sign(project(w));
        if (s != Sign::Zero) return s;
        return kernel.sign(coords(w));
      });
}

OrderingHandle group_ordering(const ArtinGroup& group, const std::string& name) {
  const auto n = group.rank();
  if (name == "dehornoy") {
    if (!(group.matrix() == builtin("A", static_cast<int>(n)))) {
      throw InvalidArgument("the Dehornoy order needs type A with the standard numbering");
    }
    return dehornoy_ordering(n + 1);
  }
  if (name == "typeb") {
    if (n < 2 || !(group.matrix() == builtin("B", static_cast<int>(n)))) {
      throw InvalidArgument("typeb needs type B with the standard numbering");
    }
    return typeB_order(n);
  }
  if (name == "magnus") {
    throw InvalidArgument("the Magnus order lives on free groups, not on this Artin group");
  }
  throw InvalidArgument("unknown ordering '" + name + "'");
}

Comparison compare_elements(const ArtinGroup& group, const OrderingHandle& ord,
                            const GroupElement& x, const GroupElement& y) {
  return ord.compare(group.to_word(x), group.to_word(y));
}

SppcReport sppc_check(const OrderingHandle& ord, const std::function<Word(const Word&)>& phi,
                      const std::function<Word()>& sampler, std::size_t samples) {
  SppcReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    Word x = sampler();
    ++report.samples;
    if (ord.sign(x) != ord.sign(phi(x))) {
      ++report.violations;
      if (!report.witness) report.witness = x;
    }
  }
  return report;
}

}  // namespace artin
