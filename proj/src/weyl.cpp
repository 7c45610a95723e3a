#include "artin/weyl.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "artin/error.hpp"

namespace artin {

std::string Scalar::to_string() const {
  if (b_ == 0) return std::to_string(a_);
  std::string out;
  if (a_ != 0) out = std::to_string(a_) + (b_ > 0 ? "+" : "");
  if (b_ == -1) {
    out += "-";
  } else if (b_ != 1) {
    out += std::to_string(b_) + "*";
  }
  return out + "phi";
}

WElement WElement::identity(std::size_t degree) {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  return WElement(std::move(p));
}

WElement operator*(const WElement& a, const WElement& b) {
  std::vector<int> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return WElement(std::move(p));
}

WElement WElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = static_cast<int>(i);
  return WElement(std::move(p));
}

bool WElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool WElement::is_involution() const { return !is_identity() && (*this * *this).is_identity(); }

std::size_t WElementHash::operator()(const WElement& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : e.permutation()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t permutation_order(const WElement& e) {
  WElement power = e;
  std::size_t order = 1;
  while (!power.is_identity()) {
    power = power * e;
    ++order;
  }
  return order;
}

namespace {

// Entries a_ij with s_i(alpha_j) = alpha_j - a_ij alpha_i; a_ij * a_ji = 4 cos^2(pi/m).
Scalar off_diagonal(int m, bool lower) {
  switch (m) {
    case 2: return 0;
    case 3: return -1;
    case 4: return lower ? -2 : -1;
    case 5: return -Scalar::phi();
    case 6: return lower ? -3 : -1;
    default: throw InvalidArgument("no exact root coordinates for label " + std::to_string(m));
  }
}

bool polygon_type(const CoxeterMatrix& m) {
  if (m.rank() != 2) return false;
  const int label = m.m(1, 2);
  return label != kInfinity && label > 6;
}

}  // namespace

RootSystemRep::RootSystemRep(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {
  if (!is_finite_type(matrix_)) {
    throw DomainError(DomainErrorKind::InfiniteType, "W is infinite for this matrix");
  }
  const std::size_t n = matrix_.rank();

  if (polygon_type(matrix_)) {
    // Dihedral group of order 2m acting on polygon vertices 0..m-1.
    const int m = matrix_.m(1, 2);
    std::vector<int> r1(m), r2(m);
    for (int i = 0; i < m; ++i) {
      r1[i] = (m - i) % m;
      r2[i] = ((1 - i) % m + m) % m;
    }
    reflections_ = {WElement(std::move(r1)), WElement(std::move(r2))};
    return;
  }

  std::vector<std::vector<Scalar>> cartan(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cartan[i][j] = i == j ? Scalar(2)
                            : off_diagonal(matrix_.m(static_cast<int>(i) + 1,
                                                     static_cast<int>(j) + 1),
                                           i > j);
    }
  }
  auto reflect = [&](std::size_t i, const std::vector<Scalar>& v) {
    Scalar c = 0;
    for (std::size_t j = 0; j < n; ++j) c += cartan[i][j] * v[j];
    std::vector<Scalar> out = v;
    out[i] -= c;
    return out;
  };

  std::map<std::vector<Scalar>, int> index;
  std::deque<int> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = 1;
    index.emplace(e, static_cast<int>(roots_.size()));
    queue.push_back(static_cast<int>(roots_.size()));
    roots_.push_back(std::move(e));
  }
  constexpr std::size_t kRootCap = 100000;
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto image = reflect(i, roots_[r]);
      if (index.count(image)) continue;
      if (roots_.size() >= kRootCap) {
        throw DomainError(DomainErrorKind::BudgetExceeded, "root orbit too large");
      }
      index.emplace(image, static_cast<int>(roots_.size()));
      queue.push_back(static_cast<int>(roots_.size()));
      roots_.push_back(std::move(image));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> perm(roots_.size());
    for (std::size_t r = 0; r < roots_.size(); ++r) perm[r] = index.at(reflect(i, roots_[r]));
    reflections_.emplace_back(std::move(perm));
  }
}

WElement RootSystemRep::image(const Word& w) const {
  check_letters(w, matrix_.rank());
  WElement out = identity();
  for (Letter x : w) out = out * reflection(std::abs(x));
  return out;
}

std::vector<EnumeratedElement> enumerate_group(const RootSystemRep& rep, std::size_t cap) {
  std::vector<EnumeratedElement> out;
  std::unordered_map<WElement, std::size_t, WElementHash> seen;
  out.push_back({rep.identity(), {}});
  seen.emplace(out.back().element, 0);
  const int n = static_cast<int>(rep.matrix().rank());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s = 1; s <= n; ++s) {
      WElement next = out[head].element * rep.reflection(s);
      if (seen.count(next)) continue;
      if (out.size() >= cap) {
        throw DomainError(DomainErrorKind::BudgetExceeded,
                          "group has more than " + std::to_string(cap) + " elements");
      }
      Word witness = out[head].witness;
      witness.push_back(s);
      seen.emplace(next, out.size());
      out.push_back({std::move(next), std::move(witness)});
    }
  }
  return out;
}

}  // namespace artin
