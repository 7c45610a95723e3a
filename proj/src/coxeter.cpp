#include "artin/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>

#include "artin/error.hpp"

namespace artin {

GeneratorSet::GeneratorSet(std::initializer_list<int> indices) {
  for (int s : indices) insert(s);
}

GeneratorSet GeneratorSet::from_indices(const std::vector<int>& indices, std::size_t rank) {
  GeneratorSet s;
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > rank) {
      throw InvalidArgument("generator " + std::to_string(i) + " out of range");
    }
    if (s.contains(i)) throw InvalidArgument("duplicate generator " + std::to_string(i));
    s.insert(i);
  }
  return s;
}

GeneratorSet GeneratorSet::all(std::size_t rank) {
  return from_mask(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
}

std::size_t GeneratorSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<int> GeneratorSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 64; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int GeneratorSet::first() const { return std::countr_zero(mask_) + 1; }

std::string GeneratorSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int i : indices()) {
    if (!first_item) out += ",";
    out += std::to_string(i);
    first_item = false;
  }
  return out + "}";
}

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries, std::string name,
                             bool require_connected)
    : entries_(std::move(entries)), name_(std::move(name)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw InvalidArgument("rank must be positive");
  if (n > 64) throw InvalidArgument("rank above 64 is not supported");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw InvalidArgument("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i][i] != 1) throw InvalidArgument("diagonal entries must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_[i][j] != entries_[j][i]) throw InvalidArgument("matrix is not symmetric");
      if (entries_[i][j] < 2) throw InvalidArgument("off-diagonal entries must be >= 2");
    }
  }
  if (require_connected && !is_connected()) {
    throw InvalidArgument("Coxeter diagram is not connected");
  }
}

bool CoxeterMatrix::is_connected() const {
  const std::size_t n = rank();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && i != j && entries_[i][j] >= 3) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
}

std::vector<std::vector<int>> identity_entries(std::size_t n) {
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

void set_label(std::vector<std::vector<int>>& e, int i, int j, int v) {
  e[i - 1][j - 1] = v;
  e[j - 1][i - 1] = v;
}

}  // namespace

CoxeterMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t rank = 0;
  std::string name;
  std::vector<std::vector<int>> entries;
  std::vector<std::vector<bool>> given;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (tok[0] == "rank") {
      if (rank != 0) throw ParseError("duplicate rank line" + where);
      if (tok.size() != 2) throw ParseError("expected 'rank N'" + where);
      int n = parse_int(tok[1], "rank");
      if (n < 1 || n > 64) throw ParseError("rank out of range" + where);
      rank = static_cast<std::size_t>(n);
      entries = identity_entries(rank);
      given.assign(rank, std::vector<bool>(rank, false));
    } else if (tok[0] == "name") {
      if (tok.size() != 2) throw ParseError("expected 'name LABEL'" + where);
      name = tok[1];
    } else if (tok[0] == "m") {
      if (rank == 0) throw ParseError("'m' line before 'rank'" + where);
      if (tok.size() != 4) throw ParseError("expected 'm i j v'" + where);
      int i = parse_int(tok[1], "index");
      int j = parse_int(tok[2], "index");
      if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rank ||
          static_cast<std::size_t>(j) > rank) {
        throw ParseError("index out of range" + where);
      }
      int v = tok[3] == "inf" ? kInfinity : parse_int(tok[3], "label");
      if (i == j) {
        // Only the trivial diagonal label is accepted; anything else fails validation.
        if (v != 1) throw InvalidArgument("diagonal entries must be 1");
        continue;
      }
      if (given[i - 1][j - 1]) throw ParseError("pair given twice" + where);
      given[i - 1][j - 1] = given[j - 1][i - 1] = true;
      set_label(entries, i, j, v);
    } else {
      throw ParseError("unknown directive '" + tok[0] + "'" + where);
    }
  }
  if (rank == 0) throw ParseError("missing 'rank' line");
  return CoxeterMatrix(std::move(entries), name);
}

std::string serialize_matrix(const CoxeterMatrix& m) {
  std::string out = "rank " + std::to_string(m.rank()) + "\n";
  if (!m.name().empty()) out += "name " + m.name() + "\n";
  const int n = static_cast<int>(m.rank());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int v = m.m(i, j);
      if (v == 2) continue;
      out += "m " + std::to_string(i) + " " + std::to_string(j) + " " +
             (v == kInfinity ? std::string("inf") : std::to_string(v)) + "\n";
    }
  }
  return out;
}

namespace {

CoxeterMatrix chain(std::size_t n, std::string name) {
  auto e = identity_entries(n);
  for (std::size_t i = 1; i < n; ++i) set_label(e, static_cast<int>(i), static_cast<int>(i) + 1, 3);
  return CoxeterMatrix(std::move(e), std::move(name));
}

CoxeterMatrix type_e(std::size_t n) {
  auto e = identity_entries(n);
  set_label(e, 1, 3, 3);
  set_label(e, 2, 4, 3);
  for (std::size_t i = 3; i < n; ++i) set_label(e, static_cast<int>(i), static_cast<int>(i) + 1, 3);
  return CoxeterMatrix(std::move(e), "E" + std::to_string(n));
}

}  // namespace

CoxeterMatrix builtin(std::string_view family, int param) {
  std::string fam(family);
  // "H", 4 is accepted as a spelling of "H4" (likewise E and F).
  if ((fam == "E" || fam == "F" || fam == "H") && param > 0) fam += std::to_string(param);
  auto bad = [&]() {
    return InvalidArgument("invalid builtin " + fam + " with parameter " + std::to_string(param));
  };
  if (fam == "A") {
    if (param < 1) throw bad();
    return chain(param, "A" + std::to_string(param));
  }
  if (fam == "B") {
    if (param < 2) throw bad();
    auto e = chain(param, "").entries();
    set_label(e, param - 1, param, 4);
    return CoxeterMatrix(std::move(e), "B" + std::to_string(param));
  }
  if (fam == "D") {
    if (param < 4) throw bad();
    auto e = identity_entries(param);
    for (int i = 1; i + 1 <= param - 1; ++i) set_label(e, i, i + 1, 3);
    set_label(e, param, param - 2, 3);
    return CoxeterMatrix(std::move(e), "D" + std::to_string(param));
  }
  if (fam == "E6") return type_e(6);
  if (fam == "E7") return type_e(7);
  if (fam == "E8") return type_e(8);
  if (fam == "F4") {
    auto e = chain(4, "").entries();
    set_label(e, 2, 3, 4);
    return CoxeterMatrix(std::move(e), "F4");
  }
  if (fam == "H3" || fam == "H4") {
    const int n = fam == "H3" ? 3 : 4;
    auto e = chain(n, "").entries();
    set_label(e, 1, 2, 5);
    return CoxeterMatrix(std::move(e), fam);
  }
  if (fam == "I2") {
    if (param < 5) throw bad();
    auto e = identity_entries(2);
    set_label(e, 1, 2, param);
    return CoxeterMatrix(std::move(e), "I2(" + std::to_string(param) + ")");
  }
  throw bad();
}

CoxeterMatrix builtin_from_name(std::string_view name) {
  std::string s(name);
  if (s.rfind("I2", 0) == 0) {
    std::string rest = s.substr(2);
    if (!rest.empty() && (rest.front() == '(' || rest.front() == '_')) rest.erase(0, 1);
    if (!rest.empty() && rest.back() == ')') rest.pop_back();
    return builtin("I2", parse_int(rest, "dihedral label"));
  }
  if (s == "E6" || s == "E7" || s == "E8" || s == "F4" || s == "H3" || s == "H4") {
    return builtin(s);
  }
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'B' || s[0] == 'D')) {
    return builtin(s.substr(0, 1), parse_int(s.substr(1), "rank"));
  }
  throw InvalidArgument("unknown type '" + s + "'");
}

namespace {

bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  const std::size_t n = a.rank();
  if (b.rank() != n) return false;
  // Cheap invariant first: multiset of label rows.
  auto profile = [n](const CoxeterMatrix& m) {
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> row(m.entries()[i]);
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  if (profile(a) != profile(b)) return false;

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a.entries()[i][k] == b.entries()[j][image[k]];
      }
      if (!ok) continue;
      image[i] = static_cast<int>(j);
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

bool connected_finite(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  if (n == 1) return true;
  if (n == 2) return m.m(1, 2) != kInfinity;
  std::vector<CoxeterMatrix> candidates{builtin("A", static_cast<int>(n)),
                                        builtin("B", static_cast<int>(n))};
  if (n >= 4) candidates.push_back(builtin("D", static_cast<int>(n)));
  if (n == 3) candidates.push_back(builtin("H3"));
  if (n == 4) {
    candidates.push_back(builtin("F4"));
    candidates.push_back(builtin("H4"));
  }
  if (n >= 6 && n <= 8) candidates.push_back(type_e(n));
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const CoxeterMatrix& c) { return isomorphic(m, c); });
}

}  // namespace

bool is_finite_type(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.rank());
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    GeneratorSet component;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      component.insert(i);
      for (int j = 1; j <= n; ++j) {
        if (!seen[j] && m.adjacent(i, j)) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    if (!connected_finite(sub_matrix(m, component))) return false;
  }
  return true;
}

CoxeterMatrix sub_matrix(const CoxeterMatrix& m, const GeneratorSet& subset) {
  if (subset.empty()) throw InvalidArgument("empty generator subset");
  auto idx = subset.indices();
  if (static_cast<std::size_t>(idx.back()) > m.rank()) {
    throw InvalidArgument("generator subset out of range");
  }
  std::vector<std::vector<int>> e(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) e[a][b] = m.m(idx[a], idx[b]);
  }
  return CoxeterMatrix(std::move(e), {}, false);
}

Word alternating(int a, int b, int k) {
  Word w;
  w.reserve(static_cast<std::size_t>(std::max(k, 0)));
  for (int i = 0; i < k; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

Word w_word(int a, int b, int k) {
  if (k < 2) throw InvalidArgument("w_k needs k >= 2");
  if (a == b) throw InvalidArgument("w_k needs distinct generators");
  return alternating(a, b, k);
}

std::size_t max_commuting_subset_size(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.rank());
  std::size_t best = 0;
  std::function<void(int, GeneratorSet)> grow = [&](int next, GeneratorSet chosen) {
    best = std::max(best, chosen.size());
    for (int s = next; s <= n; ++s) {
      bool ok = true;
      for (int t : chosen.indices()) ok = ok && m.commute(s, t);
      if (!ok) continue;
      GeneratorSet more = chosen;
      more.insert(s);
      grow(s + 1, more);
    }
  };
  grow(1, {});
  return best;
}

}  // namespace artin
