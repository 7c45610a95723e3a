#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// A generator index, 1-based. Negative values denote inverse letters.
using Letter = int;

/// A word over the generators. Positive-word contexts contain only letters > 0.
using Word = std::vector<Letter>;

/// Parses whitespace-separated signed integers, e.g. "1 2 -1".
Word parse_word(std::string_view text);

/// Like parse_word, but rejects negative letters.
Word parse_positive_word(std::string_view text);

/// Formats a word in the same syntax accepted by parse_word.
std::string format_word(const Word& w);

/// Letters reversed (no inversion).
Word reversed(Word w);

/// Formal inverse: letters reversed and negated.
Word inverse_word(const Word& w);

/// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& w);

Word concat(const Word& a, const Word& b);

bool is_positive(const Word& w);

/// Throws InvalidArgument when some letter is zero or exceeds rank in absolute value.
void check_letters(const Word& w, std::size_t rank);

}  // namespace artin
