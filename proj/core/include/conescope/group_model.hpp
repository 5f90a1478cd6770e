#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conescope/word.hpp"

namespace conescope {

enum class ModelKind { Free, Abelian, Klein, Product };

// Order in which BFS-style traversals try letters. Results are canonicalized,
// so the two orders must agree; tests use that as a cross-check.
enum class Traversal { Forward, Reversed };

// A group element: its canonical word plus the fingerprint of the model
// that produced it.
struct Element {
  Word word;
  std::uint64_t model = 0;

  bool is_identity() const { return word.empty(); }
  friend bool operator==(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    return static_cast<std::size_t>(hash_word(e.word, e.model));
  }
};

struct ShortlexElementLess {
  bool operator()(const Element& g, const Element& h) const {
    return shortlex_compare(g.word, h.word) < 0;
  }
};

std::string to_string(const Element& g);

// A group with solvable word problem given by generators and a normal form.
// Every shipped normal form is a geodesic word, so |g| is the length of the
// canonical word.
//
//   Free(k)       free reduction
//   Abelian(n)    x1^e1 ... xn^en
//   Klein         b^n a^m for <a, b | a b a^-1 = b^-1>
//   Product(A,B)  normal form of A followed by normal form of B; the
//                 generators of B are numbered after those of A.
class GroupModel {
 public:
  static GroupModel free_group(int rank);
  static GroupModel free_abelian(int rank);
  static GroupModel klein_bottle();
  static GroupModel direct_product(const GroupModel& first, const GroupModel& second);

  ModelKind kind() const;
  int rank() const;
  int generator_count() const;
  std::span<const Letter> letters() const;
  const GroupModel& factor(std::size_t i) const;
  int factor_offset(std::size_t i) const;
  std::uint64_t fingerprint() const;
  // Short human-readable name such as "F2", "Z^2", "K", "F2 x Z".
  const std::string& name() const;
  // Canonical descriptor string, e.g. "product(free(2),abelian(1))".
  const std::string& descriptor() const;

  Element normal_form(std::span<const Letter> w) const;
  Element parse(std::string_view text) const;
  Element identity() const;
  Element generator(Letter l) const;
  Element multiply(const Element& g, const Element& h) const;
  Element invert(const Element& g) const;
  // |g|_X.
  std::size_t length(const Element& g) const;
  // d_X(g, h) = |g^-1 h|_X.
  std::size_t distance(const Element& g, const Element& h) const;

  // Product models only.
  std::pair<Element, Element> split(const Element& g) const;
  Element combine(const Element& first, const Element& second) const;

  // Abelian models: exponent vector of g.
  std::vector<std::int64_t> exponents(const Element& g) const;
  Element from_exponents(std::span<const std::int64_t> e) const;
  // Klein model: (n, m) with g = b^n a^m.
  std::pair<std::int64_t, std::int64_t> klein_coordinates(const Element& g) const;

  // Exact sphere and ball sizes from closed forms (saturating).
  std::uint64_t sphere_size(int radius) const;
  std::uint64_t ball_size(int radius) const;

  void require_same(const Element& g) const;

  friend bool operator==(const GroupModel& a, const GroupModel& b) {
    return a.fingerprint() == b.fingerprint();
  }

 private:
  struct Impl;
  explicit GroupModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check_letters(std::span<const Letter> w) const;
  std::shared_ptr<const Impl> impl_;
};

// Process-wide bound on the number of elements an exhaustive enumeration may
// visit. Default 10^7.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);
// Throws CapExceeded if estimate exceeds the cap.
void check_cap(std::uint64_t estimate);

// B_X(center, radius): members sorted shortlex with their distance from the
// center.
class Ball {
 public:
  Ball() = default;
  Ball(Element center, int radius, std::vector<Element> members,
       std::unordered_map<Element, int, ElementHash> depth);

  const Element& center() const { return center_; }
  int radius() const { return radius_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Element& g) const { return depth_.count(g) != 0; }
  // Distance from the center; -1 if g is not in the ball.
  int depth_of(const Element& g) const;

 private:
  Element center_;
  int radius_ = 0;
  std::vector<Element> members_;
  std::unordered_map<Element, int, ElementHash> depth_;
};

// BFS from the identity over right multiplication by single letters.
Ball ball(const GroupModel& m, int radius, Traversal order = Traversal::Forward);
// center * B(1, radius).
Ball ball_around(const GroupModel& m, const Element& center, int radius,
                 Traversal order = Traversal::Forward);

// Path g = p0, p1, ..., h following the canonical word of g^-1 h.
std::vector<Element> geodesic(const GroupModel& m, const Element& g, const Element& h);

}  // namespace conescope
