#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "conescope/cone_geometry.hpp"
#include "conescope/errors.hpp"

namespace conescope {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

int ComponentReport::component_of(const Element& g) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (std::binary_search(components[i].begin(), components[i].end(), g, ShortlexElementLess{})) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

ComponentReport r_components(const Order& order, int width, int radius, Traversal traversal, int collar) {
  if (collar < 0) throw Error("collar must be non-negative");
  const GroupModel& m = order.model();
  const Ball b = ball(m, radius + collar, traversal);
  const Ball steps = ball(m, width, traversal);

  std::vector<Element> positives;
  for (const Element& g : b.members()) {
    if (order.sign(g) == Sign::Positive) positives.push_back(g);
  }
  if (traversal == Traversal::Reversed) std::reverse(positives.begin(), positives.end());

  std::unordered_map<Element, std::size_t, ElementHash> index;
  for (std::size_t i = 0; i < positives.size(); ++i) index.emplace(positives[i], i);

  DisjointSets sets(positives.size());
  for (std::size_t i = 0; i < positives.size(); ++i) {
    for (const Element& s : steps.members()) {
      if (s.is_identity()) continue;
      auto it = index.find(m.multiply(positives[i], s));
      if (it != index.end()) sets.unite(i, it->second);
    }
  }

  std::unordered_map<std::size_t, std::vector<Element>> classes;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    if (b.depth_of(positives[i]) > radius) continue;
    classes[sets.find(i)].push_back(positives[i]);
    ++counted;
  }

  ComponentReport report;
  report.width = width;
  report.radius = radius;
  report.collar = collar;
  report.positives = counted;
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end(), ShortlexElementLess{});
    report.components.push_back(std::move(members));
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const auto& a, const auto& b) { return ShortlexElementLess{}(a.front(), b.front()); });
  return report;
}

std::string to_string(SurveyVerdict v) {
  switch (v) {
    case SurveyVerdict::PrietoConsistent:
      return "prieto-consistent";
    case SurveyVerdict::HuchaCertified:
      return "hucha-certified";
    case SurveyVerdict::DisconnectedEvidence:
      return "disconnected-evidence";
    case SurveyVerdict::NoPositives:
      return "no-positives";
  }
  return "unknown";
}

SurveyReport connectivity_survey(const Order& order, int width, const std::vector<int>& radii,
                                 Traversal traversal) {
  SurveyReport report;
  report.width = width;
  report.radii = radii;
  for (int radius : radii) {
    report.confined_counts.push_back(r_components(order, width, radius, traversal).count());
    report.counts.push_back(r_components(order, width, radius, traversal, width).count());
  }
  report.stable = std::adjacent_find(report.counts.begin(), report.counts.end(), std::not_equal_to<>()) ==
                  report.counts.end();

  const int max_radius = radii.empty() ? 0 : *std::max_element(radii.begin(), radii.end());
  const bool any_empty = std::find(report.counts.begin(), report.counts.end(), 0) != report.counts.end();
  const bool all_one = !report.counts.empty() &&
                       std::all_of(report.counts.begin(), report.counts.end(), [](auto c) { return c == 1; });
  const std::string at_width = "width " + std::to_string(width);

  if (report.counts.empty() || any_empty) {
    report.verdict = SurveyVerdict::NoPositives;
    report.summary = "no positive elements at some scale";
    return report;
  }
  if (all_one) {
    report.verdict = SurveyVerdict::PrietoConsistent;
    report.summary = "Prieto-consistent at (" + std::to_string(width) + ", " + std::to_string(max_radius) + ")";
    return report;
  }

  const GroupModel& m = order.model();
  if (m.kind() == ModelKind::Free && m.rank() >= 2) {
    SwampCertificate cert = tree_swamp_certificate(order, width);
    const SeparationResult sep = verify_separation(cert, m, max_radius, traversal);
    report.separation = sep.verdict;
    cert.verdict = sep.verdict;
    report.certificate = std::move(cert);
    if (sep.verdict == SeparationVerdict::CertifiedTree) {
      report.verdict = SurveyVerdict::HuchaCertified;
      report.summary = "Hucha-certified at " + at_width;
      return report;
    }
  } else if (order.kind() == Order::Kind::LexPair) {
    const GroupModel& lead = m.factor(order.leading_factor());
    if (lead.kind() == ModelKind::Free && lead.rank() >= 2) {
      SwampCertificate cert = product_cylinder_certificate(order, width, max_radius);
      const SeparationResult sep = verify_separation(cert, m, max_radius, traversal);
      report.separation = sep.verdict;
      cert.verdict = sep.verdict;
      report.certificate = std::move(cert);
    }
  }
  report.verdict = SurveyVerdict::DisconnectedEvidence;
  report.summary = "disconnected at " + at_width + " up to radius " + std::to_string(max_radius) + " (evidence)";
  return report;
}

}  // namespace conescope
