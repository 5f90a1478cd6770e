#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conescope {

// A signed generator. Letters are totally ordered by code:
// x1 < x1^-1 < x2 < x2^-1 < ...
struct Letter {
  std::uint8_t code = 0;

  static constexpr Letter generator(int index, bool inverse = false) {
    return Letter{static_cast<std::uint8_t>(2 * index + (inverse ? 1 : 0))};
  }
  constexpr int index() const { return code >> 1; }
  constexpr bool is_inverse() const { return (code & 1) != 0; }
  constexpr Letter inverse() const { return Letter{static_cast<std::uint8_t>(code ^ 1)}; }
  constexpr int exponent() const { return is_inverse() ? -1 : 1; }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

// Serialization: generator i is 'a'+i, its inverse the uppercase letter,
// the empty word is "1".
inline constexpr int kMaxGenerators = 26;

char letter_char(Letter l);
std::string format_word(std::span<const Letter> w);
// Parses without alphabet bounds; models check the generator range.
Word parse_word(std::string_view text);

Word inverse_word(std::span<const Letter> w);
Word concat(std::span<const Letter> u, std::span<const Letter> v);

// Free reduction with a stack: the unique word without adjacent x x^-1.
Word free_reduce(std::span<const Letter> w);

// Length first, then lexicographic in letter order.
std::strong_ordering shortlex_compare(std::span<const Letter> u, std::span<const Letter> v);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_compare(u, v) < 0; }
};

std::uint64_t hash_word(std::span<const Letter> w, std::uint64_t seed = 0xcbf29ce484222325ULL);

struct WordHash {
  std::size_t operator()(const Word& w) const { return static_cast<std::size_t>(hash_word(w)); }
};

// The 2k letters of a rank-k alphabet in the fixed letter order.
std::vector<Letter> alphabet_letters(int generators);

}  // namespace conescope
