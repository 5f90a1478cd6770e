#include <algorithm>
#include <deque>
#include <unordered_map>

#include "conescope/cone_geometry.hpp"
#include "conescope/errors.hpp"

namespace conescope {

namespace {

void require_positive(const Order& order, const Element& g) {
  if (order.sign(g) != Sign::Positive) throw Error(to_string(g) + " is not positive");
}

void append_dedup(std::vector<Element>& out, Element p) {
  if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
}

// Shortest r-path from `from` to `to` through positive elements of the ball.
std::optional<std::vector<Element>> positive_bfs(const Order& order, const Ball& b, const Ball& steps,
                                                 const Element& from, const Element& to) {
  const GroupModel& m = order.model();
  std::unordered_map<Element, Element, ElementHash> parent;
  std::deque<Element> queue{from};
  parent.emplace(from, from);
  while (!queue.empty() && !parent.count(to)) {
    Element p = std::move(queue.front());
    queue.pop_front();
    for (const Element& s : steps.members()) {
      if (s.is_identity()) continue;
      Element q = m.multiply(p, s);
      if (!b.contains(q) || parent.count(q) || order.sign(q) != Sign::Positive) continue;
      parent.emplace(q, p);
      queue.push_back(std::move(q));
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<Element> path;
  for (Element p = to;; p = parent.at(p)) {
    path.push_back(p);
    if (p == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RPath cofinal_positive_path(const Order& order, const Element& g, const Element& h, int max_power) {
  if (!order.cofinal_central()) throw NoDeclaredCofinalCenter();
  const GroupModel& m = order.model();
  require_positive(order, g);
  require_positive(order, h);
  const Element& z = *order.cofinal_central();
  const int step = std::max<int>(1, static_cast<int>(m.length(z)));

  RPath path{{}, step};
  if (g == h) {
    path.points.push_back(g);
    return path;
  }

  const std::vector<Element> base = geodesic(m, g, h);
  // Least k >= 0 with z^k p positive for every point p of the base path.
  Element shift = m.identity();
  int power = 0;
  auto all_positive = [&] {
    return std::all_of(base.begin(), base.end(),
                       [&](const Element& p) { return order.sign(m.multiply(shift, p)) == Sign::Positive; });
  };
  while (!all_positive()) {
    if (++power > max_power) throw PathNotFound("no power of " + to_string(z) + " lifts the path");
    shift = m.multiply(shift, z);
  }

  Element zk = m.identity();
  for (int k = 0; k <= power; ++k) {
    append_dedup(path.points, m.multiply(zk, g));
    zk = m.multiply(zk, z);
  }
  for (const Element& p : base) append_dedup(path.points, m.multiply(shift, p));
  Element down = shift;
  for (int k = power; k >= 0; --k) {
    append_dedup(path.points, m.multiply(down, h));
    down = m.multiply(down, m.invert(z));
  }
  return path;
}

RPath product_positive_path(const Order& order, const Element& g, const Element& h, int width,
                            std::optional<int> working_radius) {
  if (order.kind() != Order::Kind::LexPair) throw ModelMismatch("product paths need a lex pair order");
  if (width < 1) throw Error("path width must be at least 1");
  const GroupModel& m = order.model();
  require_positive(order, g);
  require_positive(order, h);
  if (g == h) return RPath{{g}, width};

  const std::size_t lead_index = order.leading_factor();
  const Order& lead_order = order.leading();
  const Order& trail_order = order.trailing();
  const GroupModel& lead = lead_order.model();
  const GroupModel& trail = trail_order.model();

  auto coords = [&](const Element& x) {
    auto parts = m.split(x);
    return lead_index == 0 ? parts : std::make_pair(parts.second, parts.first);
  };
  auto join = [&](const Element& l, const Element& t) { return lead_index == 0 ? m.combine(l, t) : m.combine(t, l); };

  auto [l1, t1] = coords(g);
  auto [l2, t2] = coords(h);

  // Positive leading coordinate used to step off {1} x B.
  const Ball near = ball(lead, width);
  std::optional<Element> anchor;
  for (const Element& a : near.members()) {
    if (lead_order.sign(a) == Sign::Positive) {
      anchor = a;
      break;
    }
  }
  if (!anchor) throw FactorNotConnectedAtScale(width, width);
  const Element l1n = lead_order.sign(l1) == Sign::Positive ? l1 : *anchor;
  const Element l2n = lead_order.sign(l2) == Sign::Positive ? l2 : *anchor;

  const int radius = working_radius.value_or(
      static_cast<int>(std::max({l1n.word.size(), l2n.word.size(), t1.word.size(), t2.word.size()})) + width);
  if (r_components(lead_order, width, radius).count() > 1 || r_components(trail_order, width, radius).count() > 1) {
    throw FactorNotConnectedAtScale(width, radius);
  }

  RPath path{{g}, width};
  append_dedup(path.points, join(l1n, t1));

  const Ball lead_ball = ball(lead, radius);
  const Ball steps = ball(lead, width);
  auto leg = positive_bfs(lead_order, lead_ball, steps, l1n, l2n);
  if (!leg) throw PathNotFound("no positive path in the leading factor");
  for (const Element& l : *leg) append_dedup(path.points, join(l, t1));

  // The leading coordinate is positive now, so any trailing walk stays in P.
  for (const Element& t : geodesic(trail, t1, t2)) append_dedup(path.points, join(l2n, t));
  append_dedup(path.points, h);
  return path;
}

}  // namespace conescope
