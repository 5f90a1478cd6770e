#include "conescope/dot_export.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "conescope/cone_geometry.hpp"

namespace conescope {

std::string export_dot(const Order& order, int radius, int width, Traversal traversal) {
  const GroupModel& m = order.model();
  const Ball b = ball(m, radius, traversal);
  const ComponentReport comps = r_components(order, width, radius, traversal);

  std::unordered_map<Element, int, ElementHash> comp_of;
  for (std::size_t i = 0; i < comps.components.size(); ++i) {
    for (const Element& g : comps.components[i]) comp_of.emplace(g, static_cast<int>(i));
  }
  std::unordered_map<Element, std::size_t, ElementHash> id;
  for (std::size_t i = 0; i < b.size(); ++i) id.emplace(b.members()[i], i);

  std::ostringstream out;
  out << "graph ball {\n";
  out << "  // " << m.name() << ", order " << order.name() << ", R=" << radius << ", r=" << width << "\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Element& g = b.members()[i];
    auto it = comp_of.find(g);
    out << "  n" << i << " [label=\"" << to_string(g) << "\", sign=" << to_string(order.sign(g))
        << ", comp=" << (it == comp_of.end() ? -1 : it->second) << "];\n";
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (Letter l : m.letters()) {
      auto it = id.find(m.multiply(b.members()[i], m.generator(l)));
      if (it == id.end() || it->second == i) continue;
      edges.emplace(std::min(i, it->second), std::max(i, it->second));
    }
  }
  for (const auto& [a, c] : edges) out << "  n" << a << " -- n" << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace conescope
