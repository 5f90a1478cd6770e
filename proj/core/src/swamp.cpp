#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "conescope/cone_geometry.hpp"
#include "conescope/errors.hpp"

namespace conescope {

namespace {

constexpr int kDefaultHorizon = 8;

void require_free(const GroupModel& m) {
  if (m.kind() != ModelKind::Free || m.rank() < 2) {
    throw ModelMismatch("tree certificates need a free group of rank >= 2, got " + m.name());
  }
}

// Breadth-first walk of the branch of the tree at c starting with `first`,
// inside B(1, horizon). Returns the first positive element farther than
// `width` from c.
std::optional<Element> branch_witness(const Order& order, const Element& c, Letter first, int width,
                                      int horizon) {
  const GroupModel& m = order.model();
  const auto letters = m.letters();
  std::deque<Word> queue;
  queue.push_back(Word{first});
  std::uint64_t visited = 0;
  while (!queue.empty()) {
    Word rel = std::move(queue.front());
    queue.pop_front();
    const Element p = m.normal_form(concat(c.word, rel));
    // Past the point where the branch leaves the geodesic from c to 1,
    // lengths only grow, so pruning here is safe.
    if (static_cast<int>(p.word.size()) > horizon) continue;
    check_cap(++visited);
    if (static_cast<int>(rel.size()) > width && order.sign(p) == Sign::Positive) return p;
    for (Letter l : letters) {
      if (l == rel.back().inverse()) continue;
      Word next = rel;
      next.push_back(l);
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(SeparationVerdict v) {
  switch (v) {
    case SeparationVerdict::CertifiedTree:
      return "certified-tree";
    case SeparationVerdict::CertifiedExhaustive:
      return "certified-exhaustive";
    case SeparationVerdict::Evidence:
      return "evidence";
    case SeparationVerdict::NotSeparating:
      return "not-separating";
  }
  return "evidence";
}

std::optional<Letter> branch_at(const GroupModel& free, const Element& c, const Element& p) {
  require_free(free);
  const Element rel = free.multiply(free.invert(c), p);
  if (rel.word.empty()) return std::nullopt;
  return rel.word.front();
}

SwampCertificate tree_swamp_certificate(const Order& order, int width, std::optional<int> search_radius) {
  const GroupModel& m = order.model();
  require_free(m);
  if (width < 0) throw Error("swamp width must be non-negative");
  const int horizon = search_radius.value_or(width + kDefaultHorizon);
  if (horizon <= width + 1) throw Error("search radius must exceed width + 1");

  SwampCertificate cert;
  cert.width = width;
  cert.center = m.invert(max_of_ball(order, width + 1));
  cert.swamp = ball_around(m, cert.center, width).members();
  for (const Element& s : cert.swamp) {
    if (order.sign(s) != Sign::Negative) throw Error("swamp element " + to_string(s) + " is not negative");
  }

  std::vector<Element> found;
  for (Letter first : m.letters()) {
    auto w = branch_witness(order, cert.center, first, width, horizon);
    if (!w) throw WitnessNotFound(horizon);
    found.push_back(std::move(*w));
  }
  cert.witnesses = {found[0], found[1]};
  cert.verdict = SeparationVerdict::CertifiedTree;
  return cert;
}

SwampCertificate product_cylinder_certificate(const Order& order, int width, int radius,
                                              std::optional<int> search_radius) {
  if (order.kind() != Order::Kind::LexPair) throw ModelMismatch("cylinder certificates need a lex pair order");
  const GroupModel& m = order.model();
  const std::size_t lead = order.leading_factor();
  const GroupModel& other = m.factor(1 - lead);
  const SwampCertificate base = tree_swamp_certificate(order.leading(), width, search_radius);

  auto lift = [&](const Element& f, const Element& t) {
    return lead == 0 ? m.combine(f, t) : m.combine(t, f);
  };

  SwampCertificate cert;
  cert.width = width;
  cert.center = lift(base.center, other.identity());
  cert.witnesses = {lift(base.witnesses[0], other.identity()), lift(base.witnesses[1], other.identity())};
  const int reach = std::max({radius, static_cast<int>(cert.witnesses[0].word.size()),
                              static_cast<int>(cert.witnesses[1].word.size())});
  const Ball tail = ball(other, std::max(0, reach));
  for (const Element& s : base.swamp) {
    for (const Element& t : tail.members()) {
      if (static_cast<int>(s.word.size() + t.word.size()) > reach) continue;
      Element p = lift(s, t);
      if (order.sign(p) != Sign::Negative) throw Error("cylinder element " + to_string(p) + " is not negative");
      cert.swamp.push_back(std::move(p));
    }
  }
  std::sort(cert.swamp.begin(), cert.swamp.end(), ShortlexElementLess{});
  cert.verdict = SeparationVerdict::Evidence;
  return cert;
}

SeparationResult verify_separation(const SwampCertificate& cert, const GroupModel& m, int radius,
                                   Traversal traversal) {
  const std::set<Element, ShortlexElementLess> swamp(cert.swamp.begin(), cert.swamp.end());
  const Element& u = cert.witnesses[0];
  const Element& v = cert.witnesses[1];
  if (swamp.count(u) || swamp.count(v)) throw Error("certificate witness lies in the swamp");

  SeparationResult result;
  if (m.kind() == ModelKind::Free && m.rank() >= 2 && cert.width >= 0) {
    // In a tree every r-path between distinct branches at c has two
    // consecutive points whose geodesic runs through c, so one of them is
    // within r/2 of c.
    const auto expected = ball_around(m, cert.center, cert.width).members();
    const auto bu = branch_at(m, cert.center, u);
    const auto bv = branch_at(m, cert.center, v);
    if (std::vector<Element>(swamp.begin(), swamp.end()) == expected && bu && bv && *bu != *bv) {
      result.verdict = SeparationVerdict::CertifiedTree;
      return result;
    }
  }

  const int reach = std::max({radius, static_cast<int>(u.word.size()), static_cast<int>(v.word.size())});
  const Ball b = ball(m, reach, traversal);
  const Ball steps = ball(m, cert.width, traversal);

  std::unordered_map<Element, Element, ElementHash> parent;
  std::deque<Element> queue;
  parent.emplace(u, u);
  queue.push_back(u);
  bool touches_boundary = false;
  while (!queue.empty()) {
    Element p = std::move(queue.front());
    queue.pop_front();
    ++result.explored;
    if (static_cast<int>(p.word.size()) > reach - cert.width) touches_boundary = true;
    if (p == v) break;
    for (const Element& s : steps.members()) {
      if (s.is_identity()) continue;
      Element q = m.multiply(p, s);
      if (!b.contains(q) || swamp.count(q) || parent.count(q)) continue;
      parent.emplace(q, p);
      queue.push_back(std::move(q));
    }
  }

  if (parent.count(v)) {
    result.verdict = SeparationVerdict::NotSeparating;
    for (Element p = v;; p = parent.at(p)) {
      result.path.push_back(p);
      if (p == u) break;
    }
    std::reverse(result.path.begin(), result.path.end());
    return result;
  }
  result.verdict = touches_boundary ? SeparationVerdict::Evidence : SeparationVerdict::CertifiedExhaustive;
  return result;
}

RPath sample_r_path(const GroupModel& m, const Element& u, const Element& v, int width, int radius,
                    std::mt19937_64& rng) {
  constexpr int kWanderSteps = 200;
  RPath path{{u}, width};
  if (width < 1) throw Error("sampled paths need width >= 1");
  const auto letters = m.letters();
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> jump_len(1, width);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);

  Element cur = u;
  for (int step = 0; !(cur == v); ++step) {
    if (step < kWanderSteps && coin(rng) == 0) {
      Word w = cur.word;
      const int len = jump_len(rng);
      for (int i = 0; i < len; ++i) w.push_back(letters[pick(rng)]);
      Element next = m.normal_form(w);
      if (static_cast<int>(next.word.size()) > radius || next == cur) continue;
      cur = std::move(next);
    } else {
      const Element rest = m.multiply(m.invert(cur), v);
      const int len = std::min<int>(jump_len(rng), static_cast<int>(rest.word.size()));
      cur = m.normal_form(concat(cur.word, std::span<const Letter>(rest.word).first(static_cast<std::size_t>(len))));
    }
    path.points.push_back(cur);
  }
  return path;
}

}  // namespace conescope
