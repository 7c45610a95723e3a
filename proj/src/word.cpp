#include "artin/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "artin/error.hpp"

namespace artin {

const char* to_string(DomainErrorKind kind) {
  switch (kind) {
    case DomainErrorKind::InfiniteType: return "InfiniteType";
    case DomainErrorKind::NotAPalindrome: return "NotAPalindrome";
    case DomainErrorKind::NotPure: return "NotPure";
    case DomainErrorKind::NotTauInvariant: return "NotTauInvariant";
    case DomainErrorKind::PreconditionFailed: return "PreconditionFailed";
    case DomainErrorKind::BudgetExceeded: return "BudgetExceeded";
    case DomainErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case DomainErrorKind::NoTarget: return "NoTarget";
    case DomainErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    int value = 0;
    // from_chars does not accept a leading '+'.
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad letter '" + std::string(token) + "'");
    }
    if (value == 0) throw ParseError("letter 0 is not a generator");
    w.push_back(value);
    i = j;
  }
  return w;
}

Word parse_positive_word(std::string_view text) {
  Word w = parse_word(text);
  for (Letter x : w) {
    if (x < 0) throw ParseError("negative letter in a positive word");
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = -x;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_positive(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](Letter x) { return x > 0; });
}

void check_letters(const Word& w, std::size_t rank) {
  for (Letter x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > rank) {
      throw InvalidArgument("letter " + std::to_string(x) + " out of range 1.." +
                            std::to_string(rank));
    }
  }
}

}  // namespace artin
