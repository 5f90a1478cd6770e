#include "conescope/order.hpp"

#include <variant>

#include "conescope/errors.hpp"
#include "conescope/magnus.hpp"

namespace conescope {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("hyperplane value overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("hyperplane value overflow");
  return out;
}

}  // namespace

Sign sign_of(const SqrtTwoNumber& x) {
  const std::int64_t p = x.rational;
  const std::int64_t q = x.irrational;
  if (p >= 0 && q >= 0) return (p == 0 && q == 0) ? Sign::Identity : Sign::Positive;
  if (p <= 0 && q <= 0) return Sign::Negative;
  // Opposite signs: compare p^2 with 2 q^2; equality forces p = q = 0.
  __extension__ using Wide = __int128;
  const Wide p2 = static_cast<Wide>(p) * p;
  const Wide q2 = 2 * static_cast<Wide>(q) * q;
  if (p > 0) return p2 > q2 ? Sign::Positive : Sign::Negative;
  return q2 > p2 ? Sign::Positive : Sign::Negative;
}

Sign hyperplane_sign(std::span<const std::int64_t> v, std::span<const SqrtTwoNumber> weights) {
  if (v.size() != weights.size()) throw ModelMismatch("weight count does not match the rank");
  bool all_zero = true;
  for (const auto& w : weights) all_zero = all_zero && w.rational == 0 && w.irrational == 0;
  if (all_zero) throw AllZeroWeights();

  SqrtTwoNumber total;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total.rational = checked_add(total.rational, checked_mul(v[i], weights[i].rational));
    total.irrational = checked_add(total.irrational, checked_mul(v[i], weights[i].irrational));
  }
  if (const Sign s = sign_of(total); s != Sign::Identity) return s;
  for (std::int64_t c : v) {
    if (c != 0) return c > 0 ? Sign::Positive : Sign::Negative;
  }
  return Sign::Identity;
}

struct Order::Impl {
  Kind kind;
  std::string name;
  GroupModel model;
  std::optional<Element> cofinal;
  std::vector<SqrtTwoNumber> weights;
  std::optional<Order> leading;
  std::optional<Order> trailing;
  std::size_t leading_factor = 0;
  SignFunction custom;
};

Order Order::magnus(const GroupModel& free) {
  if (free.kind() != ModelKind::Free) throw ModelMismatch("Magnus order needs a free group, got " + free.name());
  return Order(std::make_shared<const Impl>(Impl{Kind::Magnus, "magnus", free, {}, {}, {}, {}, 0, {}}));
}

Order Order::hyperplane(const GroupModel& abelian, std::vector<SqrtTwoNumber> weights) {
  if (abelian.kind() != ModelKind::Abelian) {
    throw ModelMismatch("hyperplane order needs a free abelian group, got " + abelian.name());
  }
  if (weights.size() != static_cast<std::size_t>(abelian.rank())) {
    throw ModelMismatch("expected " + std::to_string(abelian.rank()) + " weights");
  }
  bool all_zero = true;
  for (const auto& w : weights) all_zero = all_zero && w.rational == 0 && w.irrational == 0;
  if (all_zero) throw AllZeroWeights();
  return Order(std::make_shared<const Impl>(
      Impl{Kind::Hyperplane, "hyperplane", abelian, {}, std::move(weights), {}, {}, 0, {}}));
}

Order Order::klein(const GroupModel& klein) {
  if (klein.kind() != ModelKind::Klein) throw ModelMismatch("Klein cone needs the Klein bottle group");
  return Order(std::make_shared<const Impl>(Impl{Kind::Klein, "klein", klein, {}, {}, {}, {}, 0, {}}));
}

Order Order::lex_pair(const GroupModel& product, Order leading, Order trailing, std::size_t leading_factor) {
  if (product.kind() != ModelKind::Product) throw ModelMismatch("lex pair needs a direct product");
  if (leading_factor > 1) throw ModelMismatch("leading factor must be 0 or 1");
  const std::size_t trailing_factor = 1 - leading_factor;
  if (!(leading.model() == product.factor(leading_factor)) ||
      !(trailing.model() == product.factor(trailing_factor))) {
    throw ModelMismatch("factor orders do not match the factors of " + product.name());
  }
  Impl impl{Kind::LexPair, "lex(" + leading.name() + "," + trailing.name() + ")", product, {}, {}, leading,
            trailing, leading_factor, {}};
  const GroupModel& lead_model = product.factor(leading_factor);
  if (lead_model.kind() == ModelKind::Abelian && lead_model.rank() == 1) {
    Element z = lead_model.generator(Letter::generator(0));
    if (leading.sign(z) == Sign::Negative) z = lead_model.invert(z);
    const Element one = product.factor(trailing_factor).identity();
    impl.cofinal = leading_factor == 0 ? product.combine(z, one) : product.combine(one, z);
  }
  return Order(std::make_shared<const Impl>(std::move(impl)));
}

Order Order::custom(std::string name, const GroupModel& model, SignFunction sign) {
  return Order(std::make_shared<const Impl>(
      Impl{Kind::Custom, std::move(name), model, {}, {}, {}, {}, 0, std::move(sign)}));
}

Order Order::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return Order(std::move(impl));
}

Order::Kind Order::kind() const { return impl_->kind; }
const std::string& Order::name() const { return impl_->name; }
const GroupModel& Order::model() const { return impl_->model; }
const std::optional<Element>& Order::cofinal_central() const { return impl_->cofinal; }
const std::vector<SqrtTwoNumber>& Order::weights() const { return impl_->weights; }

const Order& Order::leading() const {
  if (!impl_->leading) throw ModelMismatch(name() + " is not a lexicographic pair");
  return *impl_->leading;
}

const Order& Order::trailing() const {
  if (!impl_->trailing) throw ModelMismatch(name() + " is not a lexicographic pair");
  return *impl_->trailing;
}

std::size_t Order::leading_factor() const { return impl_->leading_factor; }

Sign Order::sign(const Element& g) const {
  const Impl& o = *impl_;
  o.model.require_same(g);
  switch (o.kind) {
    case Kind::Magnus:
      return magnus_sign(g.word);
    case Kind::Hyperplane: {
      const auto e = o.model.exponents(g);
      return hyperplane_sign(e, o.weights);
    }
    case Kind::Klein:
      return klein_cone_sign(o.model, g);
    case Kind::LexPair: {
      auto parts = o.model.split(g);
      const Element& lead = o.leading_factor == 0 ? parts.first : parts.second;
      const Element& trail = o.leading_factor == 0 ? parts.second : parts.first;
      if (const Sign s = o.leading->sign(lead); s != Sign::Identity) return s;
      return o.trailing->sign(trail);
    }
    case Kind::Custom:
      return o.custom(g);
  }
  return Sign::Identity;
}

bool Order::precedes(const Element& g, const Element& h) const {
  const GroupModel& m = model();
  return sign(m.multiply(m.invert(g), h)) == Sign::Positive;
}

Sign klein_cone_sign(const GroupModel& klein, const Element& g) {
  const auto [n, m] = klein.klein_coordinates(g);
  if (m > 0 || (m == 0 && n > 0)) return Sign::Positive;
  if (m == 0 && n == 0) return Sign::Identity;
  return Sign::Negative;
}

SignTable sign_table(const Order& order, const Ball& b) {
  SignTable out;
  out.reserve(b.size());
  for (const Element& g : b.members()) out.emplace(g, order.sign(g));
  return out;
}

std::string to_string(AxiomViolation::Kind k) {
  switch (k) {
    case AxiomViolation::Kind::IdentityNotNeutral:
      return "identity-not-neutral";
    case AxiomViolation::Kind::ZeroSign:
      return "nontrivial-element-without-sign";
    case AxiomViolation::Kind::NotAntisymmetric:
      return "not-antisymmetric";
    case AxiomViolation::Kind::NotClosed:
      return "not-closed-under-products";
  }
  return "unknown";
}

AxiomReport verify_order_axioms(const Order& order, int radius, Traversal traversal) {
  const GroupModel& m = order.model();
  const Ball b = ball(m, radius, traversal);
  const SignTable signs = sign_table(order, b);

  AxiomReport report;
  report.radius = radius;
  report.elements_checked = b.size();
  std::vector<const Element*> positives;
  for (const Element& g : b.members()) {
    const Sign s = signs.at(g);
    if (g.is_identity()) {
      if (s != Sign::Identity) report.violations.push_back({AxiomViolation::Kind::IdentityNotNeutral, {g}});
      continue;
    }
    if (s == Sign::Identity) {
      report.violations.push_back({AxiomViolation::Kind::ZeroSign, {g}});
      continue;
    }
    if (s == Sign::Positive) positives.push_back(&g);
    const Element inv = m.invert(g);
    // Report each pair {g, g^-1} once, from its shortlex-smaller member.
    if (signs.at(inv) != -s && ShortlexElementLess{}(g, inv)) {
      report.violations.push_back({AxiomViolation::Kind::NotAntisymmetric, {g, inv}});
    }
  }
  for (const Element* g : positives) {
    for (const Element* h : positives) {
      Element gh = m.multiply(*g, *h);
      auto it = signs.find(gh);
      if (it == signs.end()) continue;
      ++report.products_checked;
      if (it->second != Sign::Positive) {
        report.violations.push_back({AxiomViolation::Kind::NotClosed, {*g, *h, std::move(gh)}});
      }
    }
  }
  return report;
}

}  // namespace conescope
