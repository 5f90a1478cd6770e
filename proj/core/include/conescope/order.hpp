#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "conescope/group_model.hpp"
#include "conescope/sign.hpp"

namespace conescope {

// Exact number p + q*sqrt(2).
struct SqrtTwoNumber {
  std::int64_t rational = 0;
  std::int64_t irrational = 0;

  friend bool operator==(const SqrtTwoNumber&, const SqrtTwoNumber&) = default;
};

Sign sign_of(const SqrtTwoNumber& x);

// Sign of sum v_i w_i, ties on the hyperplane broken by the first nonzero
// coordinate of v. Throws AllZeroWeights / ModelMismatch on bad input.
Sign hyperplane_sign(std::span<const std::int64_t> v, std::span<const SqrtTwoNumber> weights);

// A left order given by the sign function of its positive cone P:
// g ≺ h iff sign(g^-1 h) = Positive.
class Order {
 public:
  enum class Kind { Magnus, Hyperplane, Klein, LexPair, Custom };

  using SignFunction = std::function<Sign(const Element&)>;

  // Magnus deglex order on a free group (bi-invariant).
  static Order magnus(const GroupModel& free);
  // Half-space cone on Z^n with lexicographic tie-break on the hyperplane.
  static Order hyperplane(const GroupModel& abelian, std::vector<SqrtTwoNumber> weights);
  // Cone of K = <a, b | a b a^-1 = b^-1> generated by a and b:
  // b^n a^m is positive iff m > 0, or m = 0 and n > 0.
  static Order klein(const GroupModel& klein);
  // Lexicographic order on a direct product: the factor `leading_factor`
  // decides, the other factor breaks ties.
  static Order lex_pair(const GroupModel& product, Order leading, Order trailing,
                        std::size_t leading_factor = 0);
  // Arbitrary sign function; used for experiments and broken-oracle tests.
  static Order custom(std::string name, const GroupModel& model, SignFunction sign);

  // Same order under another display name.
  Order renamed(std::string name) const;

  Kind kind() const;
  const std::string& name() const;
  const GroupModel& model() const;

  Sign sign(const Element& g) const;
  bool precedes(const Element& g, const Element& h) const;

  // A generator z with <z> central and cofinal, oriented so that z is
  // positive. Set by lex_pair when the leading factor is Z.
  const std::optional<Element>& cofinal_central() const;

  // Hyperplane only.
  const std::vector<SqrtTwoNumber>& weights() const;
  // LexPair only.
  const Order& leading() const;
  const Order& trailing() const;
  std::size_t leading_factor() const;

 private:
  struct Impl;
  explicit Order(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

Sign klein_cone_sign(const GroupModel& klein, const Element& g);

using SignTable = std::unordered_map<Element, Sign, ElementHash>;
SignTable sign_table(const Order& order, const Ball& b);

struct AxiomViolation {
  enum class Kind { IdentityNotNeutral, ZeroSign, NotAntisymmetric, NotClosed };
  Kind kind;
  // IdentityNotNeutral: {1}; ZeroSign: {g}; NotAntisymmetric: {g, g^-1};
  // NotClosed: {g, h, gh}.
  std::vector<Element> elements;
};

std::string to_string(AxiomViolation::Kind k);

struct AxiomReport {
  int radius = 0;
  std::size_t elements_checked = 0;
  std::size_t products_checked = 0;
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
};

// Exhaustive check on B(1, R) that P is a partition piece and a
// sub-semigroup (products gh with |gh| <= R).
AxiomReport verify_order_axioms(const Order& order, int radius, Traversal traversal = Traversal::Forward);

}  // namespace conescope
