#include "bscale/group_core.hpp"

#include "bscale/errors.hpp"

#include <limits>

namespace bscale {

namespace {

// Divisibility condition for a pinch opened by a t^open letter.
bool pinch_divides(const GroupParams& p, const BigInt& exponent, int open) {
  const std::int64_t modulus = open > 0 ? p.abs_m() : p.abs_n();
  return exponent % modulus == 0;
}

// t a^{cm} t^-1 = a^{cn} and t^-1 a^{cn} t = a^{cm}, c signed.
BigInt pinch_image(const GroupParams& p, const BigInt& exponent, int open) {
  if (open > 0) return exponent / p.m * p.n;
  return exponent / p.n * p.m;
}

SyllableForm without_seam(const SyllableForm& s) {
  SyllableForm v;
  v.a.assign(s.a.begin() + 1, s.a.end() - 1);
  v.t.assign(s.t.begin() + 1, s.t.end() - 1);
  return v;
}

}  // namespace

SyllableForm to_syllables(const Word& w) {
  SyllableForm s;
  for (const auto& run : w.runs()) {
    switch (run.letter) {
      case Letter::APos: s.a.back() += run.count; break;
      case Letter::ANeg: s.a.back() -= run.count; break;
      case Letter::TPos:
      case Letter::TNeg: {
        if (run.count > BigInt(std::numeric_limits<std::int32_t>::max())) {
          throw DomainError("too many t letters");
        }
        const auto count = static_cast<std::size_t>(run.count);
        for (std::size_t i = 0; i < count; ++i) {
          s.t.push_back(sign(run.letter));
          s.a.emplace_back(0);
        }
        break;
      }
    }
  }
  return s;
}

Word to_word(const SyllableForm& s) {
  Word w;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    w.append(Word::a_power(s.a[i]));
    w.push_back(s.t[i] > 0 ? Letter::TPos : Letter::TNeg);
  }
  w.append(Word::a_power(s.a.back()));
  return w;
}

std::optional<std::size_t> find_pinch(const GroupParams& p, const SyllableForm& s) {
  for (std::size_t i = 0; i + 1 < s.t.size(); ++i) {
    if (s.t[i] == -s.t[i + 1] && pinch_divides(p, s.a[i + 1], s.t[i])) return i;
  }
  return std::nullopt;
}

bool is_reduced(const GroupParams& p, const Word& w) {
  return is_freely_reduced(w) && !find_pinch(p, to_syllables(w));
}

SyllableForm britton_reduce(const GroupParams& p, const SyllableForm& s) {
  // A single left-to-right pass with a stack finds pinches in leftmost order.
  // A free cancellation t a^0 t^-1 is the c = 0 pinch.
  SyllableForm out;
  out.a.clear();
  BigInt current = s.a.front();
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    const int eps = s.t[i];
    if (!out.t.empty() && out.t.back() == -eps && pinch_divides(p, current, out.t.back())) {
      current = out.a.back() + pinch_image(p, current, out.t.back());
      out.a.pop_back();
      out.t.pop_back();
      current += s.a[i + 1];
    } else {
      out.a.push_back(std::move(current));
      out.t.push_back(eps);
      current = s.a[i + 1];
    }
  }
  out.a.push_back(std::move(current));
  return out;
}

Word britton_reduce(const GroupParams& p, const Word& w) {
  return to_word(britton_reduce(p, to_syllables(w)));
}

std::optional<BigInt> as_power_of_a(const GroupParams& p, const Word& w) {
  SyllableForm r = britton_reduce(p, to_syllables(w));
  if (!r.t.empty()) return std::nullopt;
  return r.a.front();
}

bool equal_elements(const GroupParams& p, const Word& w, const Word& u) {
  auto k = as_power_of_a(p, w * u.inverse());
  return k && *k == 0;
}

ConjugacyNormalization conjugacy_normalize(const GroupParams& p, const Word& w) {
  Word y = w;
  Word h;
  while (true) {
    // 1: free cancellation.
    if (!is_freely_reduced(y)) {
      y = free_reduce(y);
      continue;
    }
    // 2: y = c z c^-1; strip the whole common run at once.
    const auto& runs = y.runs();
    if (runs.size() >= 2 && runs.front().letter == inverse(runs.back().letter)) {
      const Letter c = runs.front().letter;
      const BigInt k = runs.front().count < runs.back().count ? runs.front().count
                                                               : runs.back().count;
      Word z;
      z.push_back(c, runs.front().count - k);
      for (std::size_t i = 1; i + 1 < runs.size(); ++i) z.push_back(runs[i].letter, runs[i].count);
      z.push_back(runs.back().letter, runs.back().count - k);
      h.push_back(c, k);
      y = std::move(z);
      continue;
    }
    // 3: a pinch inside y.
    SyllableForm s = to_syllables(y);
    if (auto i = find_pinch(p, s)) {
      SyllableForm z;
      z.a.assign(s.a.begin(), s.a.begin() + static_cast<std::ptrdiff_t>(*i) + 1);
      z.t.assign(s.t.begin(), s.t.begin() + static_cast<std::ptrdiff_t>(*i));
      z.a.back() += pinch_image(p, s.a[*i + 1], s.t[*i]) + s.a[*i + 2];
      z.a.insert(z.a.end(), s.a.begin() + static_cast<std::ptrdiff_t>(*i) + 3, s.a.end());
      z.t.insert(z.t.end(), s.t.begin() + static_cast<std::ptrdiff_t>(*i) + 2, s.t.end());
      y = to_word(z);
      continue;
    }
    // 4: a pinch across the seam of y*y: y = a^i t^e v t^-e a^j.
    const std::size_t k = s.t.size();
    if (k >= 2 && s.t.front() == -s.t.back()) {
      const BigInt seam = s.a.back() + s.a.front();
      if (pinch_divides(p, seam, s.t.back())) {
        SyllableForm z = without_seam(s);
        z.a.back() += pinch_image(p, seam, s.t.back());
        h.append(Word::a_power(s.a.front()));
        h.push_back(s.t.front() > 0 ? Letter::TPos : Letter::TNeg);
        y = to_word(z);
        continue;
      }
    }
    break;
  }
  return {std::move(y), std::move(h)};
}

bool is_cyclically_reduced(const GroupParams& p, const Word& w) { return is_reduced(p, w * w); }

ElementNormalForm element_normal_form(const GroupParams& p, const Word& w) {
  const SyllableForm s = britton_reduce(p, to_syllables(w));
  ElementNormalForm nf;
  BigInt carry = 0;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    const int eps = s.t[i];
    const std::int64_t modulus = eps > 0 ? p.abs_n() : p.abs_m();
    auto [q, c] = floor_divmod(s.a[i] + carry, modulus);
    nf.syllables.push_back({static_cast<std::int64_t>(c), eps});
    // a^{jn} t = t a^{jm};  a^{jm} t^-1 = t^-1 a^{jn}
    if (eps > 0) {
      carry = q * (p.n < 0 ? -1 : 1) * p.m;
    } else {
      carry = q * (p.m < 0 ? -1 : 1) * p.n;
    }
  }
  nf.tail = s.a.back() + carry;
  return nf;
}

Word expand(const ElementNormalForm& nf) {
  Word w;
  for (const auto& syl : nf.syllables) {
    w.append(Word::a_power(syl.c));
    w.push_back(syl.eps > 0 ? Letter::TPos : Letter::TNeg);
  }
  w.append(Word::a_power(nf.tail));
  return w;
}

}  // namespace bscale
