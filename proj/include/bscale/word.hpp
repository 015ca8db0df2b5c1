#pragma once

#include "bscale/bigint.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bscale {

enum class Letter : std::uint8_t { APos, ANeg, TPos, TNeg };

constexpr Letter inverse(Letter x) noexcept {
  switch (x) {
    case Letter::APos: return Letter::ANeg;
    case Letter::ANeg: return Letter::APos;
    case Letter::TPos: return Letter::TNeg;
    case Letter::TNeg: return Letter::TPos;
  }
  return x;
}

constexpr bool is_t(Letter x) noexcept { return x == Letter::TPos || x == Letter::TNeg; }
constexpr int sign(Letter x) noexcept { return (x == Letter::APos || x == Letter::TPos) ? 1 : -1; }
char letter_char(Letter x) noexcept;

/// A word over {a, a^-1, t, t^-1}.
///
/// Stored run-length encoded: each run is a maximal block of one repeated
/// letter. Runs of a letter and its inverse may be adjacent, so the letter
/// sequence is kept exactly as written; reduction is a separate operation.
class Word {
 public:
  struct Run {
    Letter letter;
    BigInt count;  // >= 1
    friend bool operator==(const Run&, const Run&) = default;
  };

  Word() = default;

  static Word a_power(const BigInt& e);
  static Word t_power(const BigInt& e);
  static Word single(Letter x) { Word w; w.push_back(x); return w; }

  /// Appends `count` copies of `x`, merging with the last run when possible.
  void push_back(Letter x, const BigInt& count = 1);
  void append(const Word& other);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  BigInt length() const;
  /// Number of t and t^-1 letters. Throws DomainError if it does not fit.
  std::size_t t_letter_count() const;
  std::size_t t_inverse_count() const;

  Word inverse() const;
  Word power(std::size_t k) const;

  /// The sequence of t-signs obtained by deleting every a-letter.
  std::vector<int> t_path() const;

  /// Expands to single letters. Throws DomainError above `limit` letters.
  std::vector<Letter> letters(std::size_t limit = 1U << 24) const;

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Run> runs_;
};

/// Parses the word grammar: whitespace-separated tokens
/// `letter ['^' signed-integer]` with letter in {a, A, t, T}.
/// Throws ParseError carrying the byte offset of the bad token.
Word parse_word(std::string_view text);

/// Compact serialization, e.g. "t^4aT^2a". Exponents >= 2 are folded.
/// The empty word serializes to "".
std::string to_string(const Word& w);

/// Like to_string but renders the identity as "e".
std::string display(const Word& w);

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

/// Number of t letters minus number of t^-1 letters.
std::int64_t t_exponent(const Word& w);

}  // namespace bscale
