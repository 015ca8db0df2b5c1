#pragma once

#include "bscale/bigint.hpp"
#include "bscale/group_params.hpp"
#include "bscale/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bscale {

/// A word written as a^{a[0]} t^{t[0]} a^{a[1]} ... t^{t[k-1]} a^{a[k]}.
/// Adjacent a-letters are always merged, so this is the natural working
/// form for pinch detection. Invariant: a.size() == t.size() + 1.
struct SyllableForm {
  std::vector<BigInt> a{BigInt(0)};
  std::vector<int> t;

  std::size_t t_count() const noexcept { return t.size(); }
  friend bool operator==(const SyllableForm&, const SyllableForm&) = default;
};

SyllableForm to_syllables(const Word& w);
Word to_word(const SyllableForm& s);

/// Index i such that t[i], a[i+1], t[i+1] form a pinch, leftmost first.
std::optional<std::size_t> find_pinch(const GroupParams& p, const SyllableForm& s);

/// True iff `w` is freely reduced and contains no pinch.
bool is_reduced(const GroupParams& p, const Word& w);

/// Free reduction and pinch removal (leftmost innermost first) until neither
/// applies. The result is equal to the input in BS(m,n).
SyllableForm britton_reduce(const GroupParams& p, const SyllableForm& s);
Word britton_reduce(const GroupParams& p, const Word& w);

/// k with w = a^k in BS(m,n), if such k exists.
std::optional<BigInt> as_power_of_a(const GroupParams& p, const Word& w);

bool equal_elements(const GroupParams& p, const Word& w, const Word& u);

struct ConjugacyNormalization {
  Word word;        ///< z, with z*z freely reduced and pinch-free
  Word conjugator;  ///< h with h z h^-1 = input
};

/// Cyclic normalization by the four moves (free cancellation, stripping
/// c z c^-1, pinch removal, pinch across the cyclic seam), applied in that
/// order and restarted after every application.
ConjugacyNormalization conjugacy_normalize(const GroupParams& p, const Word& w);

/// True iff w*w is freely reduced and pinch-free.
bool is_cyclically_reduced(const GroupParams& p, const Word& w);

struct NormalFormSyllable {
  std::int64_t c;  ///< 0 <= c < |n| after t, 0 <= c < |m| after t^-1
  int eps;         ///< +1 or -1
  friend auto operator<=>(const NormalFormSyllable&, const NormalFormSyllable&) = default;
};

/// a^{c_1} t^{eps_1} ... a^{c_s} t^{eps_s} a^{tail}
struct ElementNormalForm {
  std::vector<NormalFormSyllable> syllables;
  BigInt tail = 0;
  friend bool operator==(const ElementNormalForm&, const ElementNormalForm&) = default;
};

ElementNormalForm element_normal_form(const GroupParams& p, const Word& w);
Word expand(const ElementNormalForm& nf);

}  // namespace bscale
