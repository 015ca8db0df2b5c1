#include "bscale/word.hpp"

#include "bscale/errors.hpp"

#include <cctype>
#include <limits>

namespace bscale {

char letter_char(Letter x) noexcept {
  switch (x) {
    case Letter::APos: return 'a';
    case Letter::ANeg: return 'A';
    case Letter::TPos: return 't';
    case Letter::TNeg: return 'T';
  }
  return '?';
}

Word Word::a_power(const BigInt& e) {
  Word w;
  if (e > 0) w.push_back(Letter::APos, e);
  if (e < 0) w.push_back(Letter::ANeg, -e);
  return w;
}

Word Word::t_power(const BigInt& e) {
  Word w;
  if (e > 0) w.push_back(Letter::TPos, e);
  if (e < 0) w.push_back(Letter::TNeg, -e);
  return w;
}

void Word::push_back(Letter x, const BigInt& count) {
  if (count <= 0) return;
  if (!runs_.empty() && runs_.back().letter == x) {
    runs_.back().count += count;
  } else {
    runs_.push_back({x, count});
  }
}

void Word::append(const Word& other) {
  for (const auto& run : other.runs_) push_back(run.letter, run.count);
}

BigInt Word::length() const {
  BigInt total = 0;
  for (const auto& run : runs_) total += run.count;
  return total;
}

namespace {

std::size_t checked_size(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("letter count too large");
  }
  return static_cast<std::size_t>(x);
}

}  // namespace

std::size_t Word::t_letter_count() const {
  BigInt total = 0;
  for (const auto& run : runs_) {
    if (is_t(run.letter)) total += run.count;
  }
  return checked_size(total);
}

std::size_t Word::t_inverse_count() const {
  BigInt total = 0;
  for (const auto& run : runs_) {
    if (run.letter == Letter::TNeg) total += run.count;
  }
  return checked_size(total);
}

Word Word::inverse() const {
  Word w;
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
    w.push_back(bscale::inverse(it->letter), it->count);
  }
  return w;
}

Word Word::power(std::size_t k) const {
  Word w;
  for (std::size_t i = 0; i < k; ++i) w.append(*this);
  return w;
}

std::vector<int> Word::t_path() const {
  std::vector<int> path;
  path.reserve(t_letter_count());
  for (const auto& run : runs_) {
    if (!is_t(run.letter)) continue;
    path.insert(path.end(), checked_size(run.count), sign(run.letter));
  }
  return path;
}

std::vector<Letter> Word::letters(std::size_t limit) const {
  BigInt len = length();
  if (len > limit) throw DomainError("word too long to expand letter by letter");
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(len));
  for (const auto& run : runs_) {
    out.insert(out.end(), static_cast<std::size_t>(run.count), run.letter);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  const auto at_space = [&] {
    return pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]));
  };
  while (true) {
    while (at_space()) ++pos;
    if (pos >= text.size()) break;
    const std::size_t token_start = pos;
    Letter letter;
    switch (text[pos]) {
      case 'a': letter = Letter::APos; break;
      case 'A': letter = Letter::ANeg; break;
      case 't': letter = Letter::TPos; break;
      case 'T': letter = Letter::TNeg; break;
      default:
        throw ParseError(pos, std::string("unexpected character '") + text[pos] + "'");
    }
    ++pos;
    BigInt exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      const std::size_t digits_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits_start) throw ParseError(token_start, "expected integer exponent after '^'");
      exponent = BigInt(std::string(text.substr(digits_start, pos - digits_start)));
      if (negative) exponent = -exponent;
    }
    if (exponent < 0) {
      letter = inverse(letter);
      exponent = -exponent;
    }
    w.push_back(letter, exponent);
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& run : w.runs()) {
    out += letter_char(run.letter);
    if (run.count >= 2) {
      out += '^';
      out += run.count.str();
    }
  }
  return out;
}

std::string display(const Word& w) { return w.empty() ? std::string("e") : to_string(w); }

Word free_reduce(const Word& w) {
  std::vector<Word::Run> stack;
  for (const auto& run : w.runs()) {
    BigInt remaining = run.count;
    while (remaining > 0 && !stack.empty() && stack.back().letter == inverse(run.letter)) {
      BigInt k = remaining < stack.back().count ? remaining : stack.back().count;
      stack.back().count -= k;
      remaining -= k;
      if (stack.back().count == 0) stack.pop_back();
    }
    if (remaining == 0) continue;
    if (!stack.empty() && stack.back().letter == run.letter) {
      stack.back().count += remaining;
    } else {
      stack.push_back({run.letter, remaining});
    }
  }
  Word out;
  for (const auto& run : stack) out.push_back(run.letter, run.count);
  return out;
}

bool is_freely_reduced(const Word& w) {
  const auto& runs = w.runs();
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].letter == inverse(runs[i - 1].letter)) return false;
  }
  return true;
}

std::int64_t t_exponent(const Word& w) {
  BigInt rho = 0;
  for (const auto& run : w.runs()) {
    if (run.letter == Letter::TPos) rho += run.count;
    if (run.letter == Letter::TNeg) rho -= run.count;
  }
  if (big_abs(rho) > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("t-exponent sum out of range");
  }
  return static_cast<std::int64_t>(rho);
}

}  // namespace bscale
