#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conescope/sign.hpp"
#include "conescope/word.hpp"

namespace conescope {

// A noncommutative monomial X_{i1} X_{i2} ... as 0-based variable indices.
using Monomial = std::vector<std::uint8_t>;

// Total degree first, then lexicographic with X1 < X2 < ...
struct DeglexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Truncated noncommutative integer power series in X1, ..., Xk.
class MagnusSeries {
 public:
  using Coefficients = std::map<Monomial, std::int64_t, DeglexLess>;

  // The constant series 1 truncated at `degree`.
  explicit MagnusSeries(int degree);
  static MagnusSeries zero(int degree);

  int degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  std::int64_t coefficient(const Monomial& m) const;
  bool is_one() const;

  // Truncated at the smaller of the two degrees. Throws Error on overflow.
  MagnusSeries operator*(const MagnusSeries& rhs) const;

  // Deglex-least monomial of positive degree with nonzero coefficient.
  std::optional<std::pair<Monomial, std::int64_t>> leading_term() const;

  // E.g. "1 + X1X2 - X2X1".
  std::string to_string() const;

  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  void add(const Monomial& m, std::int64_t c);

 private:
  int degree_;
  Coefficients coeffs_;
};

// x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ... (truncated).
MagnusSeries magnus_letter(Letter l, int degree);

// Throws DegreeTooSmall when |w| > degree.
MagnusSeries magnus_expand(std::span<const Letter> w, int degree);

// Sign of w in the Magnus order: the sign of the leading coefficient of
// expand(w) - 1, with truncation degree max(|w|, 1). Reduces w first.
Sign magnus_sign(std::span<const Letter> w);

}  // namespace conescope
