#pragma once

// Independent reference implementations. They share no code with the
// library beyond the Letter/Word types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "conescope/word.hpp"

namespace conescope::testing {

// Repeatedly deletes the leftmost adjacent x x^-1 pair.
inline Word naive_reduce(Word w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].index() == w[i + 1].index() && w[i].is_inverse() != w[i + 1].is_inverse()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// The Klein bottle group acting on Z^2 by a: (m, n) -> (m + 1, -n) and
// b: (m, n) -> (m, n + 1). An element is the map (m, n) -> (m + p, s n + q);
// a word acts as the composition of its letters, leftmost outermost.
struct KleinAffine {
  std::int64_t p = 0;
  int s = 1;
  std::int64_t q = 0;

  // this ∘ other
  KleinAffine compose(const KleinAffine& o) const { return {p + o.p, s * o.s, s * o.q + q}; }
  friend bool operator==(const KleinAffine&, const KleinAffine&) = default;
  friend auto operator<=>(const KleinAffine&, const KleinAffine&) = default;

  static KleinAffine of(Letter l) {
    const bool a = l.index() == 0;
    if (a) return l.is_inverse() ? KleinAffine{-1, -1, 0} : KleinAffine{1, -1, 0};
    return {0, 1, l.is_inverse() ? -1 : 1};
  }
  static KleinAffine of(const Word& w) {
    KleinAffine out;
    for (Letter l : w) out = out.compose(of(l));
    return out;
  }
};

// Dense noncommutative polynomial with full (untruncated) products.
using DensePoly = std::map<std::vector<std::uint8_t>, std::int64_t>;

inline DensePoly dense_product(const DensePoly& x, const DensePoly& y) {
  DensePoly out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      auto m = mx;
      m.insert(m.end(), my.begin(), my.end());
      out[m] += cx * cy;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline DensePoly dense_letter(Letter l, int degree) {
  const auto v = static_cast<std::uint8_t>(l.index());
  DensePoly out{{{}, 1}};
  const int top = l.is_inverse() ? degree : 1;
  const int sign = l.is_inverse() ? -1 : 1;
  for (int k = 1; k <= top; ++k) {
    out.emplace(std::vector<std::uint8_t>(static_cast<std::size_t>(k), v), (k % 2 == 0) ? 1 : sign);
  }
  return out;
}

// Expansion of w with every product kept, then cut at `degree`.
inline DensePoly dense_expand(const Word& w, int degree) {
  DensePoly out{{{}, 1}};
  for (Letter l : w) out = dense_product(out, dense_letter(l, degree));
  for (auto it = out.begin(); it != out.end();) {
    it = static_cast<int>(it->first.size()) > degree ? out.erase(it) : std::next(it);
  }
  return out;
}

// Sign of the degree-then-lex least non-constant coefficient; 0 if none.
inline int dense_sign(const Word& w) {
  const int degree = std::max<int>(static_cast<int>(w.size()), 1);
  const DensePoly p = dense_expand(w, degree);
  const std::vector<std::uint8_t>* best = nullptr;
  std::int64_t coeff = 0;
  for (const auto& [m, c] : p) {
    if (m.empty() || c == 0) continue;
    if (!best || m.size() < best->size() || (m.size() == best->size() && m < *best)) {
      best = &m;
      coeff = c;
    }
  }
  return coeff > 0 ? 1 : coeff < 0 ? -1 : 0;
}

// Connected components of `points` under the relation close(i, j), by
// repeated flood fill over an explicit adjacency matrix.
template <typename Close>
std::vector<std::set<std::size_t>> brute_components(std::size_t n, Close close) {
  std::vector<int> label(n, -1);
  std::vector<std::set<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::set<std::size_t> comp{s};
    label[s] = static_cast<int>(out.size());
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (label[j] < 0 && close(i, j)) {
          label[j] = label[s];
          comp.insert(j);
          stack.push_back(j);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace conescope::testing
