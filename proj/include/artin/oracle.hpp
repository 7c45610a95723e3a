#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin::oracle {

/// A homogeneous monoid presentation: every relation equates two words of equal length,
/// so each rewriting class is a finite set of words of one length.
struct Presentation {
  std::size_t generators = 0;
  std::vector<std::pair<Word, Word>> relations;
};

/// w_m(i,j) = w_m(j,i) for every pair with finite label.
Presentation artin_presentation(const CoxeterMatrix& m);
/// Format: "gens N" then "rel <word> = <word>" lines; '#' starts a comment.
Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

struct Budget {
  std::size_t max_class_size = 1'000'000;
  std::size_t max_length = 12;
};

struct WordClass {
  Word representative;        ///< lexicographically least member
  std::vector<Word> members;  ///< sorted
};

/// Breadth-first closure of w under single relation applications.
WordClass class_of(const Presentation& p, const Word& w, const Budget& budget = {});

bool equals_oracle(const Presentation& p, const Word& u, const Word& v,
                   const Budget& budget = {});
/// True iff some member of the class of v starts with the letters of u.
bool divides_left_oracle(const Presentation& p, const Word& u, const Word& v,
                         const Budget& budget = {});
/// True iff no member of the class contains a factor s s.
bool square_free_oracle(const Presentation& p, const Word& w, const Budget& budget = {});

/// Partition of all words of length L, each class sorted, classes ordered by representative.
std::vector<std::vector<Word>> enumerate_classes(const Presentation& p, std::size_t length,
                                                 const Budget& budget = {});

/// Delta_I found as the shortest class over the letters of I that every s in I starts.
std::optional<Word> delta_oracle(const CoxeterMatrix& m, const GeneratorSet& subset,
                                 const Budget& budget = {});

struct WordDecomposition {
  Word y;  ///< class representative
  GeneratorSet subset;

  friend bool operator==(const WordDecomposition&, const WordDecomposition&) = default;
  friend auto operator<=>(const WordDecomposition&, const WordDecomposition&) = default;
};

/// Every (y, I) with p = y Delta_I rev(y) in the Artin monoid, read off the class of p.
std::vector<WordDecomposition> all_pal_decompositions(const CoxeterMatrix& m, const Word& p,
                                                      const Budget& budget = {});

/// |W| by breadth-first search over braid-move classes of reduced words: a word is
/// reduced iff no word in its class has a factor s s (Tits).
std::size_t coxeter_group_order(const CoxeterMatrix& m, std::size_t cap,
                                const Budget& budget = {});

/// |W| by Todd-Coxeter coset enumeration over the trivial subgroup.
std::size_t todd_coxeter_order(const CoxeterMatrix& m, std::size_t max_cosets);

}  // namespace artin::oracle
