#include "conescope/magnus.hpp"

#include <algorithm>
#include <stdexcept>

#include "conescope/errors.hpp"

namespace conescope {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("Magnus coefficient overflow");
  return out;
}

// Expansion of w truncated at `degree`, multiplying letter series one at a
// time. Each letter series is a power series in a single variable, so the
// product only appends powers of that variable.
MagnusSeries expand_truncated(std::span<const Letter> w, int degree) {
  MagnusSeries acc(degree);
  for (Letter l : w) {
    MagnusSeries next = MagnusSeries::zero(degree);
    const auto var = static_cast<std::uint8_t>(l.index());
    for (const auto& [mono, c] : acc.coefficients()) {
      Monomial m = mono;
      for (int e = 0; static_cast<int>(m.size()) <= degree; ++e) {
        // (1 + X)^-1 = sum (-1)^e X^e; (1 + X) has coefficients 1, 1, 0, ...
        std::int64_t ce;
        if (l.is_inverse()) {
          ce = (e % 2 == 0) ? 1 : -1;
        } else {
          ce = e <= 1 ? 1 : 0;
        }
        if (ce == 0) break;
        next.add(m, checked_mul(c, ce));
        m.push_back(var);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

MagnusSeries::MagnusSeries(int degree) : degree_(degree) {
  if (degree < 0) throw DegreeTooSmall("negative truncation degree");
  coeffs_.emplace(Monomial{}, 1);
}

MagnusSeries MagnusSeries::zero(int degree) {
  MagnusSeries out(degree);
  out.coeffs_.clear();
  return out;
}

std::int64_t MagnusSeries::coefficient(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? 0 : it->second;
}

void MagnusSeries::add(const Monomial& m, std::int64_t c) {
  if (static_cast<int>(m.size()) > degree_ || c == 0) return;
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, c, &it->second)) throw Error("Magnus coefficient overflow");
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool MagnusSeries::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first.empty() && coeffs_.begin()->second == 1;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& rhs) const {
  MagnusSeries out = zero(std::min(degree_, rhs.degree_));
  for (const auto& [a, ca] : coeffs_) {
    for (const auto& [b, cb] : rhs.coeffs_) {
      if (static_cast<int>(a.size() + b.size()) > out.degree_) break;  // deglex: degrees only grow
      Monomial m = a;
      m.insert(m.end(), b.begin(), b.end());
      out.add(m, checked_mul(ca, cb));
    }
  }
  return out;
}

std::optional<std::pair<Monomial, std::int64_t>> MagnusSeries::leading_term() const {
  for (const auto& [m, c] : coeffs_) {
    if (!m.empty() && c != 0) return std::make_pair(m, c);
  }
  return std::nullopt;
}

std::string MagnusSeries::to_string() const {
  std::string out;
  for (const auto& [m, c] : coeffs_) {
    std::string mono;
    for (std::uint8_t v : m) mono += "X" + std::to_string(v + 1);
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

MagnusSeries magnus_letter(Letter l, int degree) {
  const Letter w[] = {l};
  return expand_truncated(w, degree);
}

MagnusSeries magnus_expand(std::span<const Letter> w, int degree) {
  if (static_cast<int>(w.size()) > degree) {
    throw DegreeTooSmall("word length " + std::to_string(w.size()) + " exceeds truncation degree " +
                         std::to_string(degree));
  }
  return expand_truncated(w, degree);
}

Sign magnus_sign(std::span<const Letter> w) {
  const Word reduced = free_reduce(w);
  if (reduced.empty()) return Sign::Identity;
  const int full = static_cast<int>(reduced.size());
  // Coefficients up to degree d do not depend on the truncation degree, so
  // deepen until the first nonzero term shows up.
  for (int d = 1; d <= full; ++d) {
    const MagnusSeries s = expand_truncated(reduced, d);
    if (auto lead = s.leading_term()) return lead->second > 0 ? Sign::Positive : Sign::Negative;
  }
  throw std::logic_error("Magnus expansion of a nontrivial reduced word is 1: " + format_word(reduced));
}

}  // namespace conescope
