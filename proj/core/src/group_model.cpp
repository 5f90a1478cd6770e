#include "conescope/group_model.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>

#include "conescope/errors.hpp"

namespace conescope {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = sat_mul(out, n - k + i);
    if (num == kSaturated) return kSaturated;
    out = num / i;
  }
  return out;
}

std::uint64_t fingerprint_of(const std::string& descriptor) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : descriptor) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::atomic<std::uint64_t> g_cap{kDefaultEnumerationCap};

}  // namespace

struct GroupModel::Impl {
  ModelKind kind;
  int rank = 0;
  int generators = 0;
  std::vector<Letter> letters;
  std::vector<GroupModel> factors;
  std::string name;
  std::string descriptor;
  std::uint64_t fingerprint = 0;
};

std::string to_string(const Element& g) { return format_word(g.word); }

GroupModel GroupModel::free_group(int rank) {
  if (rank < 1 || rank > kMaxGenerators) throw InvalidDescriptor("free group rank out of range");
  auto impl = std::make_shared<Impl>();
  impl->kind = ModelKind::Free;
  impl->rank = rank;
  impl->generators = rank;
  impl->letters = alphabet_letters(rank);
  impl->name = "F" + std::to_string(rank);
  impl->descriptor = "free(" + std::to_string(rank) + ")";
  impl->fingerprint = fingerprint_of(impl->descriptor);
  return GroupModel(std::move(impl));
}

GroupModel GroupModel::free_abelian(int rank) {
  if (rank < 1 || rank > kMaxGenerators) throw InvalidDescriptor("abelian rank out of range");
  auto impl = std::make_shared<Impl>();
  impl->kind = ModelKind::Abelian;
  impl->rank = rank;
  impl->generators = rank;
  impl->letters = alphabet_letters(rank);
  impl->name = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  impl->descriptor = "abelian(" + std::to_string(rank) + ")";
  impl->fingerprint = fingerprint_of(impl->descriptor);
  return GroupModel(std::move(impl));
}

GroupModel GroupModel::klein_bottle() {
  auto impl = std::make_shared<Impl>();
  impl->kind = ModelKind::Klein;
  impl->rank = 2;
  impl->generators = 2;
  impl->letters = alphabet_letters(2);
  impl->name = "K";
  impl->descriptor = "klein";
  impl->fingerprint = fingerprint_of(impl->descriptor);
  return GroupModel(std::move(impl));
}

GroupModel GroupModel::direct_product(const GroupModel& first, const GroupModel& second) {
  const int gens = first.generator_count() + second.generator_count();
  if (gens > kMaxGenerators) throw InvalidDescriptor("too many generators in product");
  auto impl = std::make_shared<Impl>();
  impl->kind = ModelKind::Product;
  impl->rank = gens;
  impl->generators = gens;
  impl->letters = alphabet_letters(gens);
  impl->factors = {first, second};
  impl->name = first.name() + " x " + second.name();
  impl->descriptor = "product(" + first.descriptor() + "," + second.descriptor() + ")";
  impl->fingerprint = fingerprint_of(impl->descriptor);
  return GroupModel(std::move(impl));
}

ModelKind GroupModel::kind() const { return impl_->kind; }
int GroupModel::rank() const { return impl_->rank; }
int GroupModel::generator_count() const { return impl_->generators; }
std::span<const Letter> GroupModel::letters() const { return impl_->letters; }
std::uint64_t GroupModel::fingerprint() const { return impl_->fingerprint; }
const std::string& GroupModel::name() const { return impl_->name; }
const std::string& GroupModel::descriptor() const { return impl_->descriptor; }

const GroupModel& GroupModel::factor(std::size_t i) const {
  if (kind() != ModelKind::Product || i > 1) throw ModelMismatch(name() + " has no factor " + std::to_string(i));
  return impl_->factors[i];
}

int GroupModel::factor_offset(std::size_t i) const {
  return i == 0 ? 0 : factor(0).generator_count();
}

void GroupModel::check_letters(std::span<const Letter> w) const {
  for (Letter l : w) {
    if (l.index() >= generator_count()) {
      throw UnknownLetter(std::string(1, letter_char(l)) + " is not a letter of " + name());
    }
  }
}

void GroupModel::require_same(const Element& g) const {
  if (g.model != fingerprint()) throw ModelMismatch("element " + to_string(g) + " is not in " + name());
}

Element GroupModel::normal_form(std::span<const Letter> w) const {
  check_letters(w);
  Element out{{}, fingerprint()};
  switch (kind()) {
    case ModelKind::Free:
      out.word = free_reduce(w);
      break;
    case ModelKind::Abelian: {
      std::vector<std::int64_t> e(static_cast<std::size_t>(rank()), 0);
      for (Letter l : w) e[static_cast<std::size_t>(l.index())] += l.exponent();
      return from_exponents(e);
    }
    case ModelKind::Klein: {
      // Keep the running value as b^n a^m; appending b^e gives
      // b^n a^m b^e = b^(n + (-1)^m e) a^m.
      std::int64_t n = 0;
      std::int64_t m = 0;
      for (Letter l : w) {
        if (l.index() == 0) {
          m += l.exponent();
        } else {
          n += (m % 2 == 0) ? l.exponent() : -l.exponent();
        }
      }
      const Letter b = Letter::generator(1, n < 0);
      const Letter a = Letter::generator(0, m < 0);
      out.word.assign(static_cast<std::size_t>(n < 0 ? -n : n), b);
      out.word.insert(out.word.end(), static_cast<std::size_t>(m < 0 ? -m : m), a);
      break;
    }
    case ModelKind::Product: {
      const int offset = factor_offset(1);
      Word first;
      Word second;
      for (Letter l : w) {
        if (l.index() < offset) {
          first.push_back(l);
        } else {
          second.push_back(Letter{static_cast<std::uint8_t>(l.code - 2 * offset)});
        }
      }
      return combine(factor(0).normal_form(first), factor(1).normal_form(second));
    }
  }
  return out;
}

Element GroupModel::parse(std::string_view text) const { return normal_form(parse_word(text)); }

Element GroupModel::identity() const { return Element{{}, fingerprint()}; }

Element GroupModel::generator(Letter l) const {
  const Word w{l};
  return normal_form(w);
}

Element GroupModel::multiply(const Element& g, const Element& h) const {
  require_same(g);
  require_same(h);
  return normal_form(concat(g.word, h.word));
}

Element GroupModel::invert(const Element& g) const {
  require_same(g);
  return normal_form(inverse_word(g.word));
}

std::size_t GroupModel::length(const Element& g) const {
  require_same(g);
  return g.word.size();
}

std::size_t GroupModel::distance(const Element& g, const Element& h) const {
  return length(multiply(invert(g), h));
}

std::pair<Element, Element> GroupModel::split(const Element& g) const {
  require_same(g);
  const int offset = factor_offset(1);
  Element first{{}, factor(0).fingerprint()};
  Element second{{}, factor(1).fingerprint()};
  for (Letter l : g.word) {
    if (l.index() < offset) {
      first.word.push_back(l);
    } else {
      second.word.push_back(Letter{static_cast<std::uint8_t>(l.code - 2 * offset)});
    }
  }
  return {std::move(first), std::move(second)};
}

Element GroupModel::combine(const Element& first, const Element& second) const {
  factor(0).require_same(first);
  factor(1).require_same(second);
  const int offset = factor_offset(1);
  Element out{first.word, fingerprint()};
  for (Letter l : second.word) out.word.push_back(Letter{static_cast<std::uint8_t>(l.code + 2 * offset)});
  return out;
}

std::vector<std::int64_t> GroupModel::exponents(const Element& g) const {
  if (kind() != ModelKind::Abelian) throw ModelMismatch(name() + " is not free abelian");
  require_same(g);
  std::vector<std::int64_t> e(static_cast<std::size_t>(rank()), 0);
  for (Letter l : g.word) e[static_cast<std::size_t>(l.index())] += l.exponent();
  return e;
}

Element GroupModel::from_exponents(std::span<const std::int64_t> e) const {
  if (kind() != ModelKind::Abelian) throw ModelMismatch(name() + " is not free abelian");
  if (e.size() != static_cast<std::size_t>(rank())) throw ModelMismatch("exponent vector length");
  Element out{{}, fingerprint()};
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Letter l = Letter::generator(static_cast<int>(i), e[i] < 0);
    out.word.insert(out.word.end(), static_cast<std::size_t>(e[i] < 0 ? -e[i] : e[i]), l);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> GroupModel::klein_coordinates(const Element& g) const {
  if (kind() != ModelKind::Klein) throw ModelMismatch(name() + " is not the Klein bottle group");
  require_same(g);
  std::int64_t n = 0;
  std::int64_t m = 0;
  for (Letter l : g.word) (l.index() == 1 ? n : m) += l.exponent();
  return {n, m};
}

std::uint64_t GroupModel::sphere_size(int radius) const {
  if (radius < 0) return 0;
  if (radius == 0) return 1;
  const auto d = static_cast<std::uint64_t>(radius);
  switch (kind()) {
    case ModelKind::Free: {
      const auto k = static_cast<std::uint64_t>(rank());
      std::uint64_t out = 2 * k;
      for (std::uint64_t i = 1; i < d; ++i) out = sat_mul(out, 2 * k - 1);
      return out;
    }
    case ModelKind::Abelian: {
      // Lattice points of l1-norm d: choose j nonzero coordinates, their
      // signs, and a composition of d into j positive parts.
      const auto n = static_cast<std::uint64_t>(rank());
      std::uint64_t out = 0;
      for (std::uint64_t j = 1; j <= std::min(n, d); ++j) {
        out = sat_add(out, sat_mul(sat_mul(std::uint64_t{1} << j, binomial(n, j)), binomial(d - 1, j - 1)));
      }
      return out;
    }
    case ModelKind::Klein:
      // b^n a^m has length |n| + |m|, same count as Z^2.
      return 4 * d;
    case ModelKind::Product: {
      std::uint64_t out = 0;
      for (int i = 0; i <= radius; ++i) {
        out = sat_add(out, sat_mul(factor(0).sphere_size(i), factor(1).sphere_size(radius - i)));
      }
      return out;
    }
  }
  return 0;
}

std::uint64_t GroupModel::ball_size(int radius) const {
  std::uint64_t out = 0;
  for (int i = 0; i <= radius; ++i) out = sat_add(out, sphere_size(i));
  return out;
}

std::uint64_t enumeration_cap() { return g_cap.load(std::memory_order_relaxed); }
void set_enumeration_cap(std::uint64_t cap) { g_cap.store(cap, std::memory_order_relaxed); }

void check_cap(std::uint64_t estimate) {
  const std::uint64_t cap = enumeration_cap();
  if (estimate > cap) throw CapExceeded(estimate, cap);
}

Ball::Ball(Element center, int radius, std::vector<Element> members,
           std::unordered_map<Element, int, ElementHash> depth)
    : center_(std::move(center)), radius_(radius), members_(std::move(members)), depth_(std::move(depth)) {}

int Ball::depth_of(const Element& g) const {
  auto it = depth_.find(g);
  return it == depth_.end() ? -1 : it->second;
}

Ball ball(const GroupModel& m, int radius, Traversal order) {
  return ball_around(m, m.identity(), radius, order);
}

Ball ball_around(const GroupModel& m, const Element& center, int radius, Traversal order) {
  m.require_same(center);
  if (radius < 0) radius = 0;
  check_cap(m.ball_size(radius));

  std::vector<Letter> letters(m.letters().begin(), m.letters().end());
  if (order == Traversal::Reversed) std::reverse(letters.begin(), letters.end());

  std::unordered_map<Element, int, ElementHash> depth;
  std::vector<Element> members;
  std::deque<Element> queue;
  depth.emplace(center, 0);
  members.push_back(center);
  queue.push_back(center);
  while (!queue.empty()) {
    Element g = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(g);
    if (d == radius) continue;
    for (Letter l : letters) {
      Word w = g.word;
      w.push_back(l);
      Element h = m.normal_form(w);
      if (depth.emplace(h, d + 1).second) {
        members.push_back(h);
        queue.push_back(std::move(h));
      }
    }
  }
  std::sort(members.begin(), members.end(), ShortlexElementLess{});
  return Ball(center, radius, std::move(members), std::move(depth));
}

std::vector<Element> geodesic(const GroupModel& m, const Element& g, const Element& h) {
  const Element step = m.multiply(m.invert(g), h);
  std::vector<Element> path{g};
  Word w = g.word;
  for (Letter l : step.word) {
    w.push_back(l);
    path.push_back(m.normal_form(w));
  }
  return path;
}

}  // namespace conescope
