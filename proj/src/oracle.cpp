#include "artin/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "artin/error.hpp"

namespace artin::oracle {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= static_cast<std::size_t>(x + 1000);
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_word(const Presentation& p, const Word& w, const Budget& budget) {
  for (Letter x : w) {
    if (x <= 0 || static_cast<std::size_t>(x) > p.generators) {
      throw InvalidArgument("oracle words must be positive over 1.." +
                            std::to_string(p.generators));
    }
  }
  if (w.size() > budget.max_length) {
    throw DomainError(DomainErrorKind::BudgetExceeded,
                      "word longer than oracle length cap " + std::to_string(budget.max_length));
  }
}

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

template <class Visit>
void for_each_neighbour(const Presentation& p, const Word& w, Visit&& visit) {
  for (const auto& [lhs, rhs] : p.relations) {
    for (int side = 0; side < 2; ++side) {
      const Word& from = side == 0 ? lhs : rhs;
      const Word& to = side == 0 ? rhs : lhs;
      if (from.empty()) continue;
      for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!matches_at(w, pos, from)) continue;
        Word next = w;
        std::copy(to.begin(), to.end(), next.begin() + static_cast<std::ptrdiff_t>(pos));
        visit(std::move(next));
      }
    }
  }
}

bool has_square(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return true;
  }
  return false;
}

}  // namespace

Presentation artin_presentation(const CoxeterMatrix& m) {
  Presentation p;
  p.generators = m.rank();
  const int n = static_cast<int>(m.rank());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int label = m.m(i, j);
      if (label == kInfinity) continue;
      p.relations.emplace_back(alternating(i, j, label), alternating(j, i, label));
    }
  }
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Presentation p;
  bool have_gens = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (head == "gens") {
      long n = 0;
      std::string extra;
      if (have_gens || !(fields >> n) || (fields >> extra) || n < 1) {
        throw ParseError("expected a single 'gens N'" + where);
      }
      p.generators = static_cast<std::size_t>(n);
      have_gens = true;
    } else if (head == "rel") {
      if (!have_gens) throw ParseError("'rel' before 'gens'" + where);
      std::string rest;
      std::getline(fields, rest);
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'rel u = v'" + where);
      Word lhs = parse_positive_word(rest.substr(0, eq));
      Word rhs = parse_positive_word(rest.substr(eq + 1));
      if (lhs.size() != rhs.size()) throw InvalidArgument("relation is not homogeneous" + where);
      if (lhs.empty()) throw InvalidArgument("empty relation" + where);
      check_letters(lhs, p.generators);
      check_letters(rhs, p.generators);
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
    } else {
      throw ParseError("unknown directive '" + head + "'" + where);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens' line");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "gens " + std::to_string(p.generators) + "\n";
  for (const auto& [lhs, rhs] : p.relations) {
    out += "rel " + format_word(lhs) + " = " + format_word(rhs) + "\n";
  }
  return out;
}

WordClass class_of(const Presentation& p, const Word& w, const Budget& budget) {
  check_word(p, w, budget);
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for_each_neighbour(p, cur, [&](Word next) {
      if (next.size() != w.size()) {
        throw DomainError(DomainErrorKind::Internal, "rewriting changed the length");
      }
      if (seen.insert(next).second) {
        if (seen.size() > budget.max_class_size) {
          throw DomainError(DomainErrorKind::BudgetExceeded, "class larger than cap");
        }
        queue.push_back(std::move(next));
      }
    });
  }
  WordClass out;
  out.members.assign(seen.begin(), seen.end());
  std::sort(out.members.begin(), out.members.end());
  out.representative = out.members.front();
  return out;
}

bool equals_oracle(const Presentation& p, const Word& u, const Word& v, const Budget& budget) {
  if (u.size() != v.size()) {
    check_word(p, u, budget);
    check_word(p, v, budget);
    return false;
  }
  const auto cls = class_of(p, v, budget);
  check_word(p, u, budget);
  return std::binary_search(cls.members.begin(), cls.members.end(), u);
}

bool divides_left_oracle(const Presentation& p, const Word& u, const Word& v,
                         const Budget& budget) {
  check_word(p, u, budget);
  const auto cls = class_of(p, v, budget);
  return std::any_of(cls.members.begin(), cls.members.end(), [&](const Word& m) {
    return m.size() >= u.size() && std::equal(u.begin(), u.end(), m.begin());
  });
}

bool square_free_oracle(const Presentation& p, const Word& w, const Budget& budget) {
  const auto cls = class_of(p, w, budget);
  return std::none_of(cls.members.begin(), cls.members.end(), has_square);
}

std::vector<std::vector<Word>> enumerate_classes(const Presentation& p, std::size_t length,
                                                 const Budget& budget) {
  if (length > budget.max_length) {
    throw DomainError(DomainErrorKind::BudgetExceeded, "length above oracle cap");
  }
  const std::size_t n = p.generators;
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    total *= n;
    if (total > 50'000'000) throw DomainError(DomainErrorKind::BudgetExceeded, "too many words");
  }
  // Word <-> index, most significant letter first, so index order is lexicographic.
  auto decode = [&](std::size_t idx) {
    Word w(length);
    for (std::size_t i = length; i-- > 0;) {
      w[i] = static_cast<Letter>(idx % n) + 1;
      idx /= n;
    }
    return w;
  };
  auto encode = [&](const Word& w) {
    std::size_t idx = 0;
    for (Letter x : w) idx = idx * n + static_cast<std::size_t>(x - 1);
    return idx;
  };
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t idx = 0; idx < total; ++idx) {
    Word w = decode(idx);
    for_each_neighbour(p, w, [&](Word next) {
      std::size_t a = find(idx);
      std::size_t b = find(encode(next));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  std::vector<std::vector<Word>> classes;
  std::vector<std::size_t> slot(total, SIZE_MAX);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t root = find(idx);
    if (slot[root] == SIZE_MAX) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(decode(idx));
    if (classes[slot[root]].size() > budget.max_class_size) {
      throw DomainError(DomainErrorKind::BudgetExceeded, "class larger than cap");
    }
  }
  return classes;
}

std::optional<Word> delta_oracle(const CoxeterMatrix& m, const GeneratorSet& subset,
                                 const Budget& budget) {
  if (subset.empty()) return Word{};
  const auto idx = subset.indices();
  // Work in the parabolic presentation, then map letters back.
  const CoxeterMatrix sub = sub_matrix(m, subset);
  const Presentation p = artin_presentation(sub);
  const std::size_t k = idx.size();
  for (std::size_t length = k; length <= budget.max_length; ++length) {
    // Only classes containing every letter can be candidates; walk words in index order.
    std::set<Word> visited;
    std::size_t total = 1;
    for (std::size_t i = 0; i < length; ++i) total *= k;
    for (std::size_t code = 0; code < total; ++code) {
      Word w(length);
      std::size_t c = code;
      for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<Letter>(c % k) + 1;
        c /= k;
      }
      if (visited.count(w)) continue;
      const auto cls = class_of(p, w, budget);
      visited.insert(cls.members.begin(), cls.members.end());
      GeneratorSet starts;
      for (const Word& member : cls.members) starts.insert(member.front());
      if (starts.size() == k) {
        Word out;
        for (Letter x : cls.representative) out.push_back(idx[static_cast<std::size_t>(x - 1)]);
        return out;
      }
    }
  }
  return std::nullopt;
}

std::vector<WordDecomposition> all_pal_decompositions(const CoxeterMatrix& m, const Word& p,
                                                      const Budget& budget) {
  const Presentation pres = artin_presentation(m);
  const auto cls = class_of(pres, p, budget);
  std::set<WordDecomposition> found;
  std::set<std::pair<Word, Word>> seen_splits;  // (y class rep, middle class rep)
  const std::size_t len = p.size();
  for (const Word& member : cls.members) {
    for (std::size_t r = 0; 2 * r <= len; ++r) {
      Word y(member.begin(), member.begin() + static_cast<std::ptrdiff_t>(r));
      Word tail(member.end() - static_cast<std::ptrdiff_t>(r), member.end());
      if (reversed(y) != tail) continue;
      Word middle(member.begin() + static_cast<std::ptrdiff_t>(r),
                  member.end() - static_cast<std::ptrdiff_t>(r));
      Word y_rep = y.empty() ? y : class_of(pres, y, budget).representative;
      Word mid_rep = middle.empty() ? middle : class_of(pres, middle, budget).representative;
      if (!seen_splits.emplace(y_rep, mid_rep).second) continue;
      GeneratorSet letters;
      for (Letter x : middle) letters.insert(x);
      auto d = delta_oracle(m, letters, budget);
      if (!d || d->size() != middle.size()) continue;
      Word d_rep = d->empty() ? *d : class_of(pres, *d, budget).representative;
      if (d_rep == mid_rep) found.insert({y_rep, letters});
    }
  }
  return {found.begin(), found.end()};
}

std::size_t coxeter_group_order(const CoxeterMatrix& m, std::size_t cap, const Budget& budget) {
  const Presentation braid_moves = artin_presentation(m);
  Budget unbounded = budget;
  unbounded.max_length = SIZE_MAX;
  std::set<Word> level{Word{}};
  std::size_t total = 1;
  const int n = static_cast<int>(m.rank());
  while (!level.empty()) {
    std::set<Word> covered;  // members of classes already classified at this length
    std::set<Word> level_reps;
    for (const Word& rep : level) {
      for (int s = 1; s <= n; ++s) {
        Word w = rep;
        w.push_back(s);
        if (covered.count(w)) continue;
        const auto cls = class_of(braid_moves, w, unbounded);
        covered.insert(cls.members.begin(), cls.members.end());
        if (std::any_of(cls.members.begin(), cls.members.end(), has_square)) continue;
        level_reps.insert(cls.representative);
      }
    }
    total += level_reps.size();
    if (total > cap) {
      throw DomainError(DomainErrorKind::BudgetExceeded, "group larger than cap");
    }
    level = std::move(level_reps);
  }
  return total;
}

std::size_t todd_coxeter_order(const CoxeterMatrix& m, std::size_t max_cosets) {
  const std::size_t n = m.rank();
  std::vector<std::vector<std::size_t>> relators;
  for (std::size_t i = 0; i < n; ++i) relators.push_back({i, i});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int label = m.m(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      if (label == kInfinity) {
        throw DomainError(DomainErrorKind::InfiniteType, "infinite label");
      }
      std::vector<std::size_t> r;
      for (int k = 0; k < label; ++k) {
        r.push_back(i);
        r.push_back(j);
      }
      relators.push_back(std::move(r));
    }
  }
  constexpr std::size_t kNone = SIZE_MAX;
  // Generators are involutions, so a single column serves both x and x^-1.
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> parent;
  std::deque<std::size_t> queue;

  auto new_coset = [&]() {
    if (table.size() >= max_cosets) {
      throw DomainError(DomainErrorKind::BudgetExceeded, "coset table overflow");
    }
    table.emplace_back(n, kNone);
    parent.push_back(parent.size());
    return table.size() - 1;
  };
  auto rep = [&](std::size_t c) {
    std::size_t r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      std::size_t up = parent[c];
      parent[c] = r;
      c = up;
    }
    return r;
  };
  auto merge = [&](std::size_t a, std::size_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    queue.push_back(b);
  };
  auto coincidence = [&](std::size_t a, std::size_t b) {
    merge(a, b);
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t f = table[e][g];
        if (f == kNone) continue;
        if (table[f][g] == e) table[f][g] = kNone;
        const std::size_t e1 = rep(e);
        const std::size_t f1 = rep(f);
        if (table[e1][g] != kNone) {
          merge(f1, table[e1][g]);
        } else if (table[f1][g] != kNone) {
          merge(e1, table[f1][g]);
        } else {
          table[e1][g] = f1;
          table[f1][g] = e1;
        }
      }
    }
  };
  auto define = [&](std::size_t c, std::size_t g) {
    const std::size_t d = new_coset();
    table[c][g] = d;
    table[d][g] = c;
  };
  auto scan_and_fill = [&](std::size_t c, const std::vector<std::size_t>& r) {
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = r.size();  // exclusive upper end
    while (true) {
      while (i < j && table[f][r[i]] != kNone) f = table[f][r[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && table[b][r[j - 1]] != kNone) b = table[b][r[--j]];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        table[f][r[i]] = b;
        table[b][r[i]] = f;
        return;
      }
      define(f, r[i]);
    }
  };

  new_coset();
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (rep(c) != c) continue;
    for (const auto& r : relators) {
      scan_and_fill(c, r);
      if (rep(c) != c) break;
    }
    if (rep(c) != c) continue;
    for (std::size_t g = 0; g < n; ++g) {
      if (table[c][g] == kNone) define(c, g);
    }
  }
  std::size_t live = 0;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (rep(c) == c) ++live;
  }
  return live;
}

}  // namespace artin::oracle
