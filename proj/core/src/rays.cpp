#include <algorithm>
#include <cstdlib>

#include "conescope/cone_geometry.hpp"
#include "conescope/errors.hpp"

namespace conescope {

namespace {

// Maximum of the members of `b` within distance n of the identity, with a
// uniqueness check.
Element max_within(const Order& order, const Ball& b, int n) {
  const GroupModel& m = order.model();
  const Element* best = nullptr;
  for (const Element& g : b.members()) {
    if (b.depth_of(g) > n) continue;
    if (best == nullptr || order.precedes(*best, g)) best = &g;
  }
  for (const Element& g : b.members()) {
    if (b.depth_of(g) > n || g == *best) continue;
    if (order.sign(m.multiply(m.invert(g), *best)) != Sign::Positive) {
      throw Error("no unique maximum of B(1," + std::to_string(n) + "): " + to_string(*best) + " vs " +
                  to_string(g));
    }
  }
  return *best;
}

}  // namespace

bool is_r_path(const GroupModel& m, const RPath& path) {
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    if (m.distance(path.points[i], path.points[i + 1]) > static_cast<std::size_t>(path.width)) return false;
  }
  return true;
}

bool is_positive_path(const Order& order, const RPath& path) {
  return std::all_of(path.points.begin(), path.points.end(),
                     [&](const Element& p) { return order.sign(p) == Sign::Positive; });
}

Element max_of_ball(const Order& order, int n, Traversal traversal) {
  const Ball b = ball(order.model(), n, traversal);
  Element g = max_within(order, b, n);
  if (static_cast<int>(g.word.size()) != n) {
    throw Error("maximum " + to_string(g) + " of B(1," + std::to_string(n) + ") has length " +
                std::to_string(g.word.size()));
  }
  return g;
}

bool RayReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RayCheck& c) { return c.passed; });
}

RayReport verify_maxima_ray(const Order& order, int max_radius, Traversal traversal) {
  const GroupModel& m = order.model();
  const Ball b = ball(m, max_radius, traversal);

  RayReport report;
  report.max_radius = max_radius;
  for (int n = 0; n <= max_radius; ++n) report.maxima.push_back(max_within(order, b, n));

  std::vector<Element> inverses;
  for (const Element& g : report.maxima) inverses.push_back(m.invert(g));

  RayCheck length{"length", true, {}};
  for (int n = 0; n <= max_radius; ++n) {
    const auto len = m.length(report.maxima[static_cast<std::size_t>(n)]);
    if (len != static_cast<std::size_t>(n)) {
      length.passed = false;
      length.counterexamples.push_back("|g_" + std::to_string(n) + "| = " + std::to_string(len));
    }
  }

  RayCheck geodesic_check{"geodesic", true, {}};
  for (int i = 0; i <= max_radius; ++i) {
    for (int j = i + 1; j <= max_radius; ++j) {
      const auto d = m.distance(inverses[static_cast<std::size_t>(i)], inverses[static_cast<std::size_t>(j)]);
      if (d != static_cast<std::size_t>(j - i)) {
        geodesic_check.passed = false;
        geodesic_check.counterexamples.push_back("d(g_" + std::to_string(i) + "^-1, g_" + std::to_string(j) +
                                                 "^-1) = " + std::to_string(d));
      }
    }
  }

  RayCheck negative{"negative-ball", true, {}};
  for (int n = 1; n <= max_radius; ++n) {
    const Element& c = inverses[static_cast<std::size_t>(n)];
    for (const Element& g : b.members()) {
      if (b.depth_of(g) > n - 1) continue;
      const Element p = m.multiply(c, g);
      if (order.sign(p) != Sign::Negative) {
        negative.passed = false;
        negative.counterexamples.push_back(to_string(p) + " in B(g_" + std::to_string(n) + "^-1, " +
                                           std::to_string(n - 1) + ")");
      }
    }
  }

  RayCheck step{"left-step", true, {}};
  for (int n = 0; n < max_radius; ++n) {
    const Element& next = report.maxima[static_cast<std::size_t>(n + 1)];
    const Element& cur = report.maxima[static_cast<std::size_t>(n)];
    if (m.length(m.multiply(next, m.invert(cur))) != 1) {
      step.passed = false;
      step.counterexamples.push_back("g_" + std::to_string(n + 1) + " g_" + std::to_string(n) + "^-1 = " +
                                     to_string(m.multiply(next, m.invert(cur))));
    }
  }

  report.checks = {std::move(length), std::move(geodesic_check), std::move(negative), std::move(step)};
  return report;
}

}  // namespace conescope
