#include "conescope/word.hpp"

#include <algorithm>

#include "conescope/errors.hpp"

namespace conescope {

char letter_char(Letter l) {
  const char base = l.is_inverse() ? 'A' : 'a';
  return static_cast<char>(base + l.index());
}

std::string format_word(std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(letter_char(l));
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text == "1" || text.empty()) return w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') {
      w.push_back(Letter::generator(ch - 'a', false));
    } else if (ch >= 'A' && ch <= 'Z') {
      w.push_back(Letter::generator(ch - 'A', true));
    } else {
      throw UnknownLetter(std::string(1, ch) + " in \"" + std::string(text) + "\"");
    }
  }
  return w;
}

Word inverse_word(std::span<const Letter> w) {
  Word out(w.size());
  std::transform(w.rbegin(), w.rend(), out.begin(), [](Letter l) { return l.inverse(); });
  return out;
}

Word concat(std::span<const Letter> u, std::span<const Letter> v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::strong_ordering shortlex_compare(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t hash_word(std::span<const Letter> w, std::uint64_t seed) {
  // FNV-1a; stable across runs and platforms.
  std::uint64_t h = seed;
  for (Letter l : w) {
    h ^= l.code;
    h *= 0x100000001b3ULL;
  }
  h ^= w.size();
  h *= 0x100000001b3ULL;
  return h;
}

std::vector<Letter> alphabet_letters(int generators) {
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(generators));
  for (int i = 0; i < generators; ++i) {
    out.push_back(Letter::generator(i, false));
    out.push_back(Letter::generator(i, true));
  }
  return out;
}

}  // namespace conescope
