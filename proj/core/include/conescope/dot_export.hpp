#pragma once

#include <string>

#include "conescope/order.hpp"

namespace conescope {

// Graphviz rendering of B(1, R): one node per element in shortlex order,
// labeled by its canonical word, with attributes sign=pos|neg|id and
// comp=<index of its r-component among positives, -1 otherwise>; one edge
// per generator adjacency.
std::string export_dot(const Order& order, int radius, int width, Traversal traversal = Traversal::Forward);

}  // namespace conescope
