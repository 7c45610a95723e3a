#include "artin/monoid.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "artin/error.hpp"

namespace artin {

struct ArtinMonoid::Cache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, std::optional<Word>> deltas;
  std::once_flag tau_once;
  std::vector<int> tau;
};

ArtinMonoid::ArtinMonoid(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)),
      finite_type_(is_finite_type(matrix_)),
      cache_(std::make_shared<Cache>()) {}

void ArtinMonoid::check(const Word& w) const {
  for (Letter x : w) {
    if (x <= 0 || static_cast<std::size_t>(x) > rank()) {
      throw InvalidArgument("letter " + std::to_string(x) + " is not a positive generator 1.." +
                            std::to_string(rank()));
    }
  }
}

// Moves the leftmost s of w[from..] to position `from`. Letters left of s never contain s:
// commuting letters are swapped past; a blocking letter t with label m forces the
// alternating continuation t s t ... (m - 2 letters) to be extracted right of s, after
// which the relation w_m(t,s) = w_m(s,t) moves s one step left. Any failure means s is
// not a left divisor of w[from..].
bool ArtinMonoid::extract_at(Word& w, std::size_t from, int s, ExtractTrace* trace,
                             std::size_t depth) const {
  if (trace) trace->max_depth = std::max(trace->max_depth, depth);
  auto it = std::find(w.begin() + static_cast<std::ptrdiff_t>(from), w.end(), s);
  if (it == w.end()) return false;
  std::size_t pos = static_cast<std::size_t>(it - w.begin());
  while (pos > from) {
    const int t = w[pos - 1];
    const int m = matrix_.m(s, t);
    if (m == 2) {
      std::swap(w[pos - 1], w[pos]);
      if (trace) {
        ++trace->steps;
        trace->events.push_back({pos - 1, pos});
      }
      --pos;
      continue;
    }
    if (m == kInfinity) return false;
    for (int j = 0; j < m - 2; ++j) {
      const int letter = j % 2 == 0 ? t : s;
      if (!extract_at(w, pos + 1 + static_cast<std::size_t>(j), letter, trace, depth + 1)) {
        return false;
      }
    }
    for (int j = 0; j < m; ++j) w[pos - 1 + static_cast<std::size_t>(j)] = j % 2 == 0 ? s : t;
    if (trace) {
      ++trace->steps;
      trace->events.push_back({pos - 1, pos - 2 + static_cast<std::size_t>(m)});
    }
    --pos;
  }
  return true;
}

std::optional<Word> ArtinMonoid::left_extract(const Word& w, int s, ExtractTrace* trace) const {
  check(w);
  if (s < 1 || static_cast<std::size_t>(s) > rank()) {
    throw InvalidArgument("generator " + std::to_string(s) + " out of range");
  }
  Word buf = w;
  if (!extract_at(buf, 0, s, trace, 0)) return std::nullopt;
  return Word(buf.begin() + 1, buf.end());
}

std::optional<Word> ArtinMonoid::right_extract(const Word& w, int s) const {
  auto tail = left_extract(rev(w), s);
  if (!tail) return std::nullopt;
  return rev(*tail);
}

std::size_t ArtinMonoid::blocking_left_index(const Word& w, std::size_t position) const {
  check(w);
  if (position < 1 || position > w.size()) throw InvalidArgument("position out of range");
  const int s = w[position - 1];
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < position; ++i) {
    if (matrix_.m(w[i], s) >= 3 && w[i] != s) ++count;
  }
  return count;
}

GeneratorSet ArtinMonoid::starting_set(const Word& w) const {
  check(w);
  GeneratorSet present;
  for (Letter x : w) present.insert(x);
  GeneratorSet out;
  for (int s : present.indices()) {
    Word buf = w;
    if (extract_at(buf, 0, s, nullptr, 0)) out.insert(s);
  }
  return out;
}

GeneratorSet ArtinMonoid::finishing_set(const Word& w) const { return starting_set(rev(w)); }

std::optional<Word> ArtinMonoid::divides_left(const Word& u, const Word& v) const {
  check(u);
  check(v);
  if (u.size() > v.size()) return std::nullopt;
  Word buf = v;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!extract_at(buf, i, u[i], nullptr, 0)) return std::nullopt;
  }
  return Word(buf.begin() + static_cast<std::ptrdiff_t>(u.size()), buf.end());
}

std::optional<Word> ArtinMonoid::divides_right(const Word& u, const Word& v) const {
  auto q = divides_left(rev(u), rev(v));
  if (!q) return std::nullopt;
  return rev(*q);
}

bool ArtinMonoid::equals(const Word& u, const Word& v) const {
  if (u.size() != v.size()) {
    check(u);
    check(v);
    return false;
  }
  return divides_left(u, v).has_value();
}

std::size_t ArtinMonoid::default_lcm_budget(const Word& u, const Word& v) const {
  return 2 * (u.size() + v.size()) * rank();
}

// Right reversing: u^-1 v is rewritten by s^-1 t -> f(s,t) f(t,s)^-1 with
// s f(s,t) = t f(t,s) = w_m(s,t), and s^-1 s -> empty, until it reads v' u'^-1.
LcmResult ArtinMonoid::right_lcm(const Word& u, const Word& v,
                                 std::optional<std::size_t> budget) const {
  check(u);
  check(v);
  const std::size_t limit = budget.value_or(default_lcm_budget(u, v));
  Word cur = concat(inverse_word(u), v);
  std::size_t scan = 0;
  while (true) {
    std::size_t i = scan;
    while (i + 1 < cur.size() && !(cur[i] < 0 && cur[i + 1] > 0)) ++i;
    if (i + 1 >= cur.size()) break;
    const int a = -cur[i];
    const int c = cur[i + 1];
    Word replacement;
    if (a != c) {
      const int m = matrix_.m(a, c);
      if (m == kInfinity) return {LcmStatus::NoCommonMultiple, {}};
      replacement = concat(alternating(c, a, m - 1), inverse_word(alternating(a, c, m - 1)));
    }
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i),
              cur.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(),
               replacement.end());
    if (cur.size() > 4 * limit + 8) return {LcmStatus::BudgetExceeded, {}};
    // Everything left of i - 1 is already of the form positive* or positive* negative*.
    scan = i == 0 ? 0 : i - 1;
  }
  Word result = u;
  for (Letter x : cur) {
    if (x > 0) result.push_back(x);
  }
  if (result.size() > limit) return {LcmStatus::BudgetExceeded, {}};
  return {LcmStatus::Found, std::move(result)};
}

LcmResult ArtinMonoid::delta_result(const GeneratorSet& subset,
                                    std::optional<std::size_t> budget) const {
  auto idx = subset.indices();
  if (!idx.empty() && static_cast<std::size_t>(idx.back()) > rank()) {
    throw InvalidArgument("generator subset out of range");
  }
  if (idx.empty()) return {LcmStatus::Found, {}};
  Word acc{idx.front()};
  for (std::size_t k = 1; k < idx.size(); ++k) {
    LcmResult r = right_lcm(acc, Word{idx[k]}, budget);
    if (r.status != LcmStatus::Found) return r;
    acc = std::move(r.word);
  }
  return {LcmStatus::Found, std::move(acc)};
}

std::optional<Word> ArtinMonoid::delta(const GeneratorSet& subset) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->deltas.find(subset.mask());
    if (it != cache_->deltas.end()) return it->second;
  }
  LcmResult r = delta_result(subset);
  std::optional<Word> value;
  if (r.status == LcmStatus::Found) value = std::move(r.word);
  std::lock_guard lock(cache_->mutex);
  return cache_->deltas.emplace(subset.mask(), std::move(value)).first->second;
}

std::vector<GeneratorSet> ArtinMonoid::normal_form(const Word& w) const {
  check(w);
  std::vector<GeneratorSet> heads;
  Word rest = w;
  while (!rest.empty()) {
    GeneratorSet head = starting_set(rest);
    auto d = delta(head);
    if (!d) throw DomainError(DomainErrorKind::Internal, "missing Delta of a starting set");
    auto q = divides_left(*d, rest);
    if (!q) throw DomainError(DomainErrorKind::Internal, "Delta of S(x) does not divide x");
    heads.push_back(head);
    rest = std::move(*q);
  }
  return heads;
}

const Word& ArtinMonoid::delta() const {
  if (!finite_type_) {
    throw DomainError(DomainErrorKind::InfiniteType, "Delta exists only in finite type");
  }
  const GeneratorSet all = GeneratorSet::all(rank());
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->deltas.find(all.mask());
    if (it != cache_->deltas.end() && it->second) return *it->second;
  }
  LcmResult r = delta_result(all, std::size_t{1} << 20);
  if (r.status != LcmStatus::Found) {
    throw DomainError(DomainErrorKind::Internal, "Delta not found in finite type");
  }
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->deltas[all.mask()];
  if (!slot) slot = std::move(r.word);
  return *slot;
}

Word ArtinMonoid::delta_power(std::size_t k) const {
  const Word& d = delta();
  Word out;
  out.reserve(d.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), d.begin(), d.end());
  return out;
}

const std::vector<int>& ArtinMonoid::tau_perm() const {
  const Word& d = delta();
  std::call_once(cache_->tau_once, [&] {
    std::vector<int> tau(rank() + 1, 0);
    for (int s = 1; s <= static_cast<int>(rank()); ++s) {
      Word sd{s};
      sd.insert(sd.end(), d.begin(), d.end());
      auto q = divides_left(d, sd);
      if (!q || q->size() != 1) {
        throw DomainError(DomainErrorKind::Internal, "s Delta is not Delta t");
      }
      tau[s] = q->front();
    }
    cache_->tau = std::move(tau);
  });
  return cache_->tau;
}

Word ArtinMonoid::apply_tau(const Word& w) const {
  const auto& tau = tau_perm();
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > rank()) {
      throw InvalidArgument("letter out of range");
    }
    out.push_back(x > 0 ? tau[x] : -tau[-x]);
  }
  return out;
}

bool ArtinMonoid::tau_is_trivial() const {
  const auto& tau = tau_perm();
  for (std::size_t s = 1; s < tau.size(); ++s) {
    if (tau[s] != static_cast<int>(s)) return false;
  }
  return true;
}

}  // namespace artin
