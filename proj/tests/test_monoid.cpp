#include <doctest.h>

#include <random>
#include <thread>

#include "artin/error.hpp"
#include "artin/monoid.hpp"
#include "artin/oracle.hpp"

using namespace artin;

namespace {

CoxeterMatrix triangle() { return parse_matrix("rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n"); }

// All positive words of length `len` over `rank` letters.
std::vector<Word> all_words(int rank, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (int s = 1; s <= rank; ++s) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937& rng, int rank, std::size_t len) {
  std::uniform_int_distribution<int> letter(1, rank);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letter(rng));
  return w;
}

}  // namespace

TEST_SUITE("monoid") {

TEST_CASE("rev") {
  CHECK(ArtinMonoid::rev({1, 2}) == Word{2, 1});
  CHECK(ArtinMonoid::rev({}).empty());
  CHECK(ArtinMonoid::rev({1, 2, 1}) == Word{1, 2, 1});
}

TEST_CASE("rev maps equal words to equal words") {
  ArtinMonoid m(builtin("A", 3));
  auto p = oracle::artin_presentation(builtin("A", 3));
  for (const auto& cls : oracle::enumerate_classes(p, 5)) {
    for (const Word& w : cls) CHECK(m.equals(ArtinMonoid::rev(w), ArtinMonoid::rev(cls.front())));
  }
}

TEST_CASE("left extraction examples") {
  ArtinMonoid a2(builtin("A", 2));
  CHECK(a2.left_extract({2, 1, 2}, 1) == Word{2, 1});
  CHECK_FALSE(a2.left_extract({2}, 1).has_value());

  ArtinMonoid a3(builtin("A", 3));
  auto tail = a3.left_extract({2, 3, 1, 2, 3, 1}, 3);
  REQUIRE(tail.has_value());
  CHECK(a3.equals(concat({3}, *tail), {1, 2, 1, 3, 2, 1}));
  // s3 s2 s1 s3 s2 s1 maps to a non-reduced element of W, so 2 1 3 2 1 is not a valid tail.
  auto p = oracle::artin_presentation(builtin("A", 3));
  CHECK_FALSE(oracle::equals_oracle(p, {3, 2, 1, 3, 2, 1}, {1, 2, 1, 3, 2, 1}));
}

TEST_CASE("left extraction is sound and complete against the oracle") {
  for (const CoxeterMatrix& m : {builtin("A", 2), builtin("A", 3), builtin("B", 2), triangle()}) {
    ArtinMonoid mon(m);
    auto p = oracle::artin_presentation(m);
    const int n = static_cast<int>(m.rank());
    for (std::size_t len = 0; len <= 5; ++len) {
      for (const Word& w : all_words(n, len)) {
        for (int s = 1; s <= n; ++s) {
          auto tail = mon.left_extract(w, s);
          CHECK(tail.has_value() == oracle::divides_left_oracle(p, {s}, w));
          if (tail) {
            CHECK(tail->size() + 1 == w.size());
            CHECK(oracle::equals_oracle(p, concat({s}, *tail), w));
          }
        }
      }
    }
  }
}

TEST_CASE("extraction step count stays below 4^length") {
  for (const CoxeterMatrix& m : {builtin("A", 3), builtin("B", 3), builtin("H3"), triangle()}) {
    ArtinMonoid mon(m);
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
      const std::size_t len = 1 + static_cast<std::size_t>(t % 9);
      Word w = random_word(rng, 3, len);
      for (int s = 1; s <= 3; ++s) {
        ExtractTrace trace;
        mon.left_extract(w, s, &trace);
        double bound = 1;
        for (std::size_t i = 0; i < len; ++i) bound *= 4;
        CHECK(static_cast<double>(trace.steps) <= bound);
        CHECK(trace.max_depth < len);
      }
    }
  }
}

TEST_CASE("extracting from x rev(x) only rewrites the first half") {
  ArtinMonoid m(builtin("A", 3));
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const Word& x : all_words(3, len)) {
      Word w = concat(x, ArtinMonoid::rev(x));
      for (int s : m.starting_set(x).indices()) {
        ExtractTrace trace;
        auto tail = m.left_extract(w, s, &trace);
        REQUIRE(tail.has_value());
        for (const RewriteEvent& e : trace.events) CHECK(e.last < x.size());
      }
    }
  }
}

TEST_CASE("blocking left index") {
  ArtinMonoid a2(builtin("A", 2));
  ArtinMonoid a3(builtin("A", 3));
  CHECK(a2.blocking_left_index({2, 1}, 2) == 1);
  CHECK(a3.blocking_left_index({3, 1}, 2) == 0);
  CHECK(a2.blocking_left_index({2, 2, 1}, 3) == 2);
  CHECK_THROWS_AS(a2.blocking_left_index({2, 1}, 3), InvalidArgument);
}

TEST_CASE("starting and finishing sets") {
  ArtinMonoid a2(builtin("A", 2));
  auto p = oracle::artin_presentation(builtin("A", 2));
  CHECK(a2.starting_set({1, 2, 1}) == GeneratorSet{1, 2});
  CHECK(oracle::divides_left_oracle(p, {2}, {1, 2, 1}));
  CHECK(a2.starting_set({}).empty());
  CHECK(a2.finishing_set({1, 2}) == GeneratorSet{2});
  CHECK_FALSE(oracle::divides_left_oracle(p, {1}, {2, 1}));
}

TEST_CASE("palindromic words start and finish with the same letters") {
  ArtinMonoid m(builtin("A", 3));
  for (std::size_t len = 0; len <= 4; ++len) {
    for (const Word& x : all_words(3, len)) {
      Word w = concat(x, ArtinMonoid::rev(x));
      CHECK(m.starting_set(w) == m.finishing_set(w));
    }
  }
}

TEST_CASE("equality and division examples") {
  ArtinMonoid a2(builtin("A", 2));
  ArtinMonoid a3(builtin("A", 3));
  CHECK(a3.equals({2, 3, 1, 2, 3, 1}, {1, 2, 1, 3, 2, 1}));
  CHECK(a3.equals({1, 3}, {3, 1}));
  CHECK_FALSE(a2.equals({1, 2}, {2, 1}));
  CHECK_FALSE(a2.equals({1}, {1, 1}));

  CHECK(a2.divides_left({1}, {1, 2}) == Word{2});
  auto q = a2.divides_left({1, 2}, {2, 1, 2});
  REQUIRE(q.has_value());
  CHECK(*q == Word{1});
  CHECK_FALSE(a2.divides_left({2}, {1, 1}).has_value());
  CHECK_FALSE(oracle::divides_left_oracle(oracle::artin_presentation(builtin("A", 2)), {2}, {1, 1}));
  CHECK(a2.divides_right({1}, {1, 2, 1}).has_value());
}

TEST_CASE("equality matches oracle classes") {
  for (const CoxeterMatrix& m : {builtin("A", 3), builtin("B", 2), triangle()}) {
    ArtinMonoid mon(m);
    auto p = oracle::artin_presentation(m);
    for (std::size_t len = 2; len <= 5; ++len) {
      auto classes = oracle::enumerate_classes(p, len);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (const Word& w : classes[c]) CHECK(mon.equals(w, classes[c].front()));
        if (c > 0) CHECK_FALSE(mon.equals(classes[c].front(), classes[c - 1].front()));
      }
    }
  }
}

TEST_CASE("right lcm") {
  ArtinMonoid b2(builtin("B", 2));
  LcmResult r = b2.right_lcm({1}, {2});
  REQUIRE(r.status == LcmStatus::Found);
  CHECK(r.word == Word{1, 2, 1, 2});
  // Minimality: no shorter word is divisible by both generators.
  auto p = oracle::artin_presentation(builtin("B", 2));
  for (std::size_t len = 1; len < 4; ++len) {
    for (const Word& w : all_words(2, len)) {
      CHECK_FALSE((oracle::divides_left_oracle(p, {1}, w) && oracle::divides_left_oracle(p, {2}, w)));
    }
  }

  ArtinMonoid a2(builtin("A", 2));
  r = a2.right_lcm({1}, {1, 2});
  REQUIRE(r.status == LcmStatus::Found);
  CHECK(r.word == Word{1, 2});

  ArtinMonoid tri(triangle());
  CHECK(tri.right_lcm({1}, {3}).status == LcmStatus::NoCommonMultiple);
  CHECK(tri.right_lcm({1}, {2}).word == Word{1, 2, 1});
  CHECK(b2.right_lcm({1}, {2}, 3).status == LcmStatus::BudgetExceeded);

  // Affine A2: the lcm of two generators exists, the one of all three does not.
  ArtinMonoid affine(parse_matrix("rank 3\nm 1 2 3\nm 2 3 3\nm 1 3 3\n"));
  CHECK(affine.delta_result({1, 2}).status == LcmStatus::Found);
  CHECK(affine.delta_result({1, 2, 3}).status != LcmStatus::Found);
}

TEST_CASE("lcm is a common multiple divided by every other common multiple") {
  for (const CoxeterMatrix& m : {builtin("A", 3), builtin("B", 3), builtin("H3")}) {
    ArtinMonoid mon(m);
    std::mt19937 rng(17);
    for (int t = 0; t < 60; ++t) {
      Word u = random_word(rng, 3, 1 + t % 4), v = random_word(rng, 3, 1 + t % 3);
      LcmResult r = mon.right_lcm(u, v);
      REQUIRE(r.status == LcmStatus::Found);
      CHECK(mon.divides_left(u, r.word).has_value());
      CHECK(mon.divides_left(v, r.word).has_value());
      // Delta^k is a common multiple once k >= both lengths.
      Word big = mon.delta_power(std::max(u.size(), v.size()));
      CHECK(mon.divides_left(r.word, big).has_value());
    }
  }
}

TEST_CASE("fundamental elements") {
  ArtinMonoid a3(builtin("A", 3));
  CHECK(a3.equals(a3.delta(), {1, 2, 3, 1, 2, 1}));
  CHECK(a3.delta({1, 3}) == Word{1, 3});
  CHECK(ArtinMonoid(builtin("B", 2)).delta({1, 2}) == Word{1, 2, 1, 2});
  CHECK(a3.delta({})->empty());

  auto d = oracle::delta_oracle(builtin("A", 3), {1, 2, 3});
  REQUIRE(d.has_value());
  CHECK(a3.equals(a3.delta(), *d));

  CHECK_THROWS_AS(ArtinMonoid(triangle()).delta(), DomainError);
  CHECK_FALSE(ArtinMonoid(triangle()).delta({1, 3}).has_value());
  CHECK(ArtinMonoid(triangle()).delta({2, 3}) == Word{2, 3, 2, 3});
}

TEST_CASE("every Delta_I is palindromic and divides Delta") {
  for (const char* name : {"A4", "B4", "D4", "F4", "H3", "I2(7)"}) {
    ArtinMonoid m(builtin_from_name(name));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.rank()); ++mask) {
      auto d = m.delta(GeneratorSet::from_mask(mask));
      REQUIRE(d.has_value());
      CHECK_MESSAGE(m.equals(*d, ArtinMonoid::rev(*d)), name);
      CHECK(m.divides_left(*d, m.delta()).has_value());
      CHECK(m.starting_set(*d) == GeneratorSet::from_mask(mask));
    }
  }
}

TEST_CASE("Delta_J divides x whenever J lies in S(x)") {
  ArtinMonoid m(builtin("A", 4));
  std::mt19937 rng(23);
  for (int t = 0; t < 300; ++t) {
    Word x = random_word(rng, 4, 8);
    const GeneratorSet start = m.starting_set(x);
    for (std::uint64_t sub = start.mask();; sub = (sub - 1) & start.mask()) {
      CHECK(m.divides_left(*m.delta(GeneratorSet::from_mask(sub)), x).has_value());
      if (sub == 0) break;
    }
  }
}

TEST_CASE("normal form") {
  ArtinMonoid a3(builtin("A", 3));
  CHECK(a3.normal_form({1, 3}) == std::vector<GeneratorSet>{{1, 3}});
  CHECK(a3.normal_form(a3.delta()) == std::vector<GeneratorSet>{{1, 2, 3}});
  CHECK(a3.normal_form({1, 1}) == std::vector<GeneratorSet>{{1}, {1}});
  CHECK(a3.normal_form({}).empty());

  std::mt19937 rng(29);
  for (int t = 0; t < 400; ++t) {
    Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    CHECK((a3.normal_form(u) == a3.normal_form(v)) == a3.equals(u, v));
  }
}

TEST_CASE("tau") {
  ArtinMonoid a3(builtin("A", 3));
  CHECK(a3.tau_perm() == std::vector<int>{0, 3, 2, 1});
  CHECK(ArtinMonoid(builtin("A", 2)).tau_perm() == std::vector<int>{0, 2, 1});
  CHECK(ArtinMonoid(builtin("B", 2)).tau_is_trivial());
  CHECK(ArtinMonoid(builtin("D", 4)).tau_is_trivial());
  CHECK(ArtinMonoid(builtin("D", 5)).tau_perm() == std::vector<int>{0, 1, 2, 3, 5, 4});
  CHECK(ArtinMonoid(builtin("E6")).tau_perm() == std::vector<int>{0, 6, 2, 5, 4, 3, 1});
  CHECK(ArtinMonoid(builtin("E7")).tau_is_trivial());
  CHECK(ArtinMonoid(builtin("I2", 5)).tau_perm() == std::vector<int>{0, 2, 1});

  CHECK(a3.apply_tau({1, 2}) == Word{3, 2});
  CHECK(a3.apply_tau({}).empty());
  CHECK(a3.equals(a3.apply_tau(a3.delta()), a3.delta()));
  CHECK_THROWS_AS(ArtinMonoid(triangle()).tau_perm(), DomainError);
}

TEST_CASE("concurrent Delta computations agree") {
  ArtinMonoid m(builtin("B", 4));
  std::vector<std::vector<Word>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::uint64_t mask = 0; mask < 16; ++mask) {
        seen[t].push_back(*m.delta(GeneratorSet::from_mask((mask + 5 * t) % 16)));
      }
      std::rotate(seen[t].begin(), seen[t].begin() + (16 - (5 * t) % 16) % 16, seen[t].end());
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
}

TEST_CASE("letters are validated") {
  ArtinMonoid m(builtin("A", 2));
  CHECK_THROWS_AS(m.equals({1, 3}, {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(m.left_extract({1, -2}, 1), InvalidArgument);
  CHECK_THROWS_AS(m.left_extract({1}, 4), InvalidArgument);
}

}  // TEST_SUITE
