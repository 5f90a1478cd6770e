#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conescope/group_model.hpp"
#include "conescope/order.hpp"

namespace conescope {

// A sequence of elements with consecutive distances at most `width`.
struct RPath {
  std::vector<Element> points;
  int width = 1;
};

bool is_r_path(const GroupModel& m, const RPath& path);
bool is_positive_path(const Order& order, const RPath& path);

// ---------------------------------------------------------------------------
// Maxima of balls.

// The ≺-maximum g_n of B(1, n). Throws Error if the maximum is not unique or
// |g_n| != n, which can only happen for an oracle that is not a left order.
Element max_of_ball(const Order& order, int n, Traversal traversal = Traversal::Forward);

struct RayCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> counterexamples;
};

struct RayReport {
  int max_radius = 0;
  std::vector<Element> maxima;  // g_0, ..., g_N
  // length (|g_n| = n), geodesic (d(g_n^-1, g_m^-1) = |n - m|),
  // negative-ball (B(g_n^-1, n-1) ⊆ P^-1), left-step (g_{n+1} ∈ X g_n).
  std::vector<RayCheck> checks;

  bool passed() const;
};

RayReport verify_maxima_ray(const Order& order, int max_radius, Traversal traversal = Traversal::Forward);

// ---------------------------------------------------------------------------
// r-components of the positive part of a ball.

struct ComponentReport {
  int width = 1;
  int radius = 0;
  int collar = 0;
  std::size_t positives = 0;
  // Each class sorted shortlex; classes sorted by their representative
  // (the shortlex-least member).
  std::vector<std::vector<Element>> components;

  std::size_t count() const { return components.size(); }
  // Index of the class containing g, or -1.
  int component_of(const Element& g) const;
};

// Union-find over P ∩ B(1, R), joining elements at distance <= r. Paths are
// confined to B(1, R + collar); only classes of P ∩ B(1, R) are reported.
// collar = 0 confines paths to the ball itself.
ComponentReport r_components(const Order& order, int width, int radius,
                             Traversal traversal = Traversal::Forward, int collar = 0);

// ---------------------------------------------------------------------------
// Negative swamps.

enum class SeparationVerdict { CertifiedTree, CertifiedExhaustive, Evidence, NotSeparating };

std::string to_string(SeparationVerdict v);

struct SwampCertificate {
  int width = 0;
  Element center;
  std::vector<Element> swamp;  // sorted shortlex
  std::array<Element, 2> witnesses;
  SeparationVerdict verdict = SeparationVerdict::Evidence;
};

// First letter of the reduced word c^-1 p (the branch of the tree at c that
// contains p), or nullopt when p == c. Free groups only.
std::optional<Letter> branch_at(const GroupModel& free, const Element& c, const Element& p);

// For a free group of rank >= 2: c = g_{r+1}^-1, S = c B(1, r), and one
// positive witness farther than r from c in two distinct branches at c.
// Every branch is searched inside B(1, search_radius) (default r + 8); if
// one has no witness the call throws WitnessNotFound.
SwampCertificate tree_swamp_certificate(const Order& order, int width,
                                        std::optional<int> search_radius = std::nullopt);

// Lifts the tree certificate of the leading free factor of a lexicographic
// order to the cylinder S x B, truncated to B(1, radius).
SwampCertificate product_cylinder_certificate(const Order& order, int width, int radius,
                                              std::optional<int> search_radius = std::nullopt);

struct SeparationResult {
  SeparationVerdict verdict = SeparationVerdict::Evidence;
  // An r-path from u to v avoiding S when verdict is NotSeparating.
  std::vector<Element> path;
  std::size_t explored = 0;
};

// Free groups with a well-formed tree certificate: structural proof.
// Otherwise: breadth-first search for an S-avoiding r-path from u to v in
// B(1, radius). No path and a component of u that stays r away from the
// boundary sphere gives CertifiedExhaustive; no path but a component that
// reaches the boundary gives Evidence.
SeparationResult verify_separation(const SwampCertificate& cert, const GroupModel& m, int radius,
                                   Traversal traversal = Traversal::Forward);

// Random r-path from u to v inside B(1, radius): random short jumps mixed
// with progress along a geodesic to v.
RPath sample_r_path(const GroupModel& m, const Element& u, const Element& v, int width, int radius,
                    std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Positive paths witnessing coarse connectivity.

// For an order with a declared central cofinal z: walk g -> z^k g, follow
// z^k times a geodesic from g to h, walk back down to h. k >= 0 is the least
// power with every translated point positive.
RPath cofinal_positive_path(const Order& order, const Element& g, const Element& h,
                            int max_power = 1'000'000);

// Three-leg path for a lexicographic order on A x B whose factor cones are
// r0-connected in the working ball: move the leading coordinate into the
// leading cone, walk the leading factor, then walk the trailing factor.
RPath product_positive_path(const Order& order, const Element& g, const Element& h, int width = 1,
                            std::optional<int> working_radius = std::nullopt);

// ---------------------------------------------------------------------------

enum class SurveyVerdict { PrietoConsistent, HuchaCertified, DisconnectedEvidence, NoPositives };

std::string to_string(SurveyVerdict v);

// counts use a collar of width r around each ball, which removes the
// isolated boundary points that a hard cutoff creates; confined_counts are
// the same partitions with paths kept inside the ball.
struct SurveyReport {
  int width = 1;
  std::vector<int> radii;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> confined_counts;
  bool stable = true;
  SurveyVerdict verdict = SurveyVerdict::NoPositives;
  std::string summary;
  std::optional<SwampCertificate> certificate;
  std::optional<SeparationVerdict> separation;
};

SurveyReport connectivity_survey(const Order& order, int width, const std::vector<int>& radii,
                                 Traversal traversal = Traversal::Forward);

}  // namespace conescope
