#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "conescope/cone_geometry.hpp"
#include "conescope/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace conescope;
using namespace conescope::testing;

namespace {

std::vector<Order> shipped_orders() {
  return {magnus_f2(), irrational_z2(), lex_z2(), klein_order(), f2_leading(), z_leading()};
}

// Partition of the positives of B(1, R) by flood fill over all pairs.
std::set<std::set<std::string>> brute_partition(const Order& o, int width, int radius) {
  const GroupModel& m = o.model();
  const Ball b = ball(m, radius);
  std::vector<Element> pos;
  for (const Element& g : b.members()) {
    if (o.sign(g) == Sign::Positive) pos.push_back(g);
  }
  const auto comps = brute_components(pos.size(), [&](std::size_t i, std::size_t j) {
    return static_cast<int>(m.distance(pos[i], pos[j])) <= width;
  });
  std::set<std::set<std::string>> out;
  for (const auto& c : comps) {
    std::set<std::string> s;
    for (std::size_t i : c) s.insert(to_string(pos[i]));
    out.insert(s);
  }
  return out;
}

std::set<std::set<std::string>> as_sets(const ComponentReport& r) {
  std::set<std::set<std::string>> out;
  for (const auto& c : r.components) {
    std::set<std::string> s;
    for (const Element& g : c) s.insert(to_string(g));
    out.insert(s);
  }
  return out;
}

Element brute_max(const Order& o, int n) {
  const Ball b = ball(o.model(), n);
  Element best = b.members().front();
  for (const Element& g : b.members()) {
    if (o.precedes(best, g)) best = g;
  }
  return best;
}

}  // namespace

TEST(Maxima, Examples) {
  EXPECT_EQ(to_string(max_of_ball(magnus_f2(), 1)), "a");
  EXPECT_TRUE(max_of_ball(klein_order(), 0).is_identity());
  EXPECT_EQ(to_string(max_of_ball(klein_order(), 1)), "a");
}

TEST(Maxima, AgreesWithLinearScan) {
  for (const Order& o : shipped_orders()) {
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(max_of_ball(o, n), brute_max(o, n)) << o.name() << " n=" << n;
      EXPECT_EQ(max_of_ball(o, n, Traversal::Reversed), brute_max(o, n));
    }
  }
}

TEST(Maxima, RayPassesForShippedOrders) {
  for (const Order& o : shipped_orders()) {
    const int n = o.model().kind() == ModelKind::Free ? 5 : 6;
    const RayReport r = verify_maxima_ray(o, n);
    EXPECT_TRUE(r.passed()) << o.name();
    ASSERT_EQ(r.maxima.size(), static_cast<std::size_t>(n + 1));
    // Negative-ball containment rechecked here by direct enumeration.
    const GroupModel& m = o.model();
    for (int k = 1; k <= n; ++k) {
      const Element c = m.invert(r.maxima[static_cast<std::size_t>(k)]);
      const Ball around = ball_around(m, c, k - 1);
      for (const Element& g : around.members()) EXPECT_EQ(o.sign(g), Sign::Negative);
    }
  }
}

TEST(Maxima, ZeroRadiusIsVacuous) {
  const RayReport r = verify_maxima_ray(magnus_f2(), 0);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.maxima.size(), 1u);
  EXPECT_TRUE(r.maxima[0].is_identity());
}

TEST(Maxima, NonInvariantOracleIsCaught) {
  // Positive iff the last letter is a generator; not a left order.
  const GroupModel m = f2();
  const Order bad = Order::custom("last-letter", m, [](const Element& g) {
    if (g.is_identity()) return Sign::Identity;
    return g.word.back().is_inverse() ? Sign::Negative : Sign::Positive;
  });
  bool caught = false;
  try {
    caught = !verify_maxima_ray(bad, 3).passed();
  } catch (const Error&) {
    caught = true;
  }
  EXPECT_TRUE(caught);
}

TEST(Components, MatchBruteForcePartition) {
  for (const Order& o : shipped_orders()) {
    const int radius = o.model().kind() == ModelKind::Product ? 3 : 4;
    for (int width = 1; width <= 2; ++width) {
      EXPECT_EQ(as_sets(r_components(o, width, radius)), brute_partition(o, width, radius)) << o.name();
    }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(r_components(irrational_z2(), 1, 4).count(), 1u);
  EXPECT_GE(r_components(magnus_f2(), 1, 6).count(), 2u);
  // Positives of B(1,1) in F2 under Magnus: a and b, at distance 2.
  const ComponentReport unit = r_components(magnus_f2(), 1, 1);
  EXPECT_EQ(unit.positives, 2u);
  EXPECT_EQ(unit.count(), 2u);
}

TEST(Components, TraversalIndependent) {
  for (const Order& o : shipped_orders()) {
    const auto f = r_components(o, 1, 4, Traversal::Forward);
    const auto r = r_components(o, 1, 4, Traversal::Reversed);
    EXPECT_EQ(f.components, r.components) << o.name();
  }
}

TEST(Components, WidthRefinement) {
  for (const Order& o : shipped_orders()) {
    const auto fine = r_components(o, 1, 4);
    const auto coarse = r_components(o, 2, 4);
    EXPECT_GE(fine.count(), coarse.count());
    for (const auto& c : fine.components) {
      const int target = coarse.component_of(c.front());
      for (const Element& g : c) EXPECT_EQ(coarse.component_of(g), target);
    }
  }
}

TEST(Components, CollarJoinsBoundarySingletons) {
  const Order o = z_leading();
  EXPECT_EQ(r_components(o, 1, 3).count(), 3u);
  const ComponentReport collared = r_components(o, 1, 3, Traversal::Forward, 1);
  EXPECT_EQ(collared.count(), 1u);
  EXPECT_EQ(collared.positives, r_components(o, 1, 3).positives);
  EXPECT_EQ(collared.collar, 1);
}

TEST(TreeSwamp, CertificatesForSmallWidths) {
  const Order o = magnus_f2();
  const GroupModel& m = o.model();
  const std::size_t sizes[] = {1, 5, 17, 53};
  for (int r = 0; r <= 3; ++r) {
    const SwampCertificate c = tree_swamp_certificate(o, r);
    EXPECT_EQ(c.width, r);
    EXPECT_EQ(c.center, m.invert(max_of_ball(o, r + 1)));
    EXPECT_EQ(c.swamp.size(), sizes[r]);
    EXPECT_EQ(c.swamp, ball_around(m, c.center, r).members());
    for (const Element& s : c.swamp) EXPECT_EQ(o.sign(s), Sign::Negative);
    for (const Element& w : c.witnesses) {
      EXPECT_EQ(o.sign(w), Sign::Positive);
      EXPECT_GT(static_cast<int>(m.distance(c.center, w)), r);
    }
    EXPECT_NE(branch_at(m, c.center, c.witnesses[0]), branch_at(m, c.center, c.witnesses[1]));
    EXPECT_EQ(verify_separation(c, m, r + 8).verdict, SeparationVerdict::CertifiedTree);
  }
  const SwampCertificate zero = tree_swamp_certificate(o, 0);
  ASSERT_EQ(zero.swamp.size(), 1u);
  EXPECT_EQ(zero.swamp[0], zero.center);
}

TEST(TreeSwamp, BranchAt) {
  const GroupModel m = f2();
  EXPECT_EQ(branch_at(m, m.parse("AA"), m.parse("AAb")), Letter::generator(1));
  EXPECT_EQ(branch_at(m, m.parse("AA"), m.parse("a")), Letter::generator(0));
  EXPECT_FALSE(branch_at(m, m.parse("AA"), m.parse("AA")).has_value());
}

TEST(TreeSwamp, TinyHorizonThrows) {
  EXPECT_THROW(tree_swamp_certificate(magnus_f2(), 2, 4), WitnessNotFound);
  EXPECT_THROW(tree_swamp_certificate(magnus_f2(), 2, 3), Error);
}

TEST(TreeSwamp, RequiresFreeGroupOfRankTwo) {
  EXPECT_THROW(tree_swamp_certificate(klein_order(), 1), ModelMismatch);
}

TEST(TreeSwamp, SampledPathsMeetTheSwamp) {
  const Order o = magnus_f2();
  const GroupModel& m = o.model();
  std::mt19937_64 rng(99);
  for (int r = 1; r <= 3; ++r) {
    const SwampCertificate c = tree_swamp_certificate(o, r);
    const std::set<Element, ShortlexElementLess> s(c.swamp.begin(), c.swamp.end());
    for (int i = 0; i < 100; ++i) {
      const RPath p = sample_r_path(m, c.witnesses[0], c.witnesses[1], r, r + 8, rng);
      ASSERT_TRUE(is_r_path(m, p));
      EXPECT_EQ(p.points.front(), c.witnesses[0]);
      EXPECT_EQ(p.points.back(), c.witnesses[1]);
      bool hit = false;
      for (const Element& g : p.points) {
        EXPECT_LE(m.length(g), static_cast<std::size_t>(r + 8));
        hit = hit || s.count(g) != 0;
      }
      EXPECT_TRUE(hit);
    }
  }
}

TEST(Separation, AbelianPathAroundASinglePoint) {
  const GroupModel m = z2();
  SwampCertificate c;
  c.width = 1;
  c.center = m.parse("a");
  c.swamp = {m.parse("a")};
  c.witnesses = {m.parse("b"), m.parse("aa")};
  const SeparationResult r = verify_separation(c, m, 3);
  ASSERT_EQ(r.verdict, SeparationVerdict::NotSeparating);
  ASSERT_FALSE(r.path.empty());
  EXPECT_EQ(r.path.front(), c.witnesses[0]);
  EXPECT_EQ(r.path.back(), c.witnesses[1]);
  for (std::size_t i = 0; i < r.path.size(); ++i) {
    EXPECT_NE(r.path[i], c.swamp[0]);
    if (i > 0) EXPECT_LE(m.distance(r.path[i - 1], r.path[i]), 1u);
  }
}

TEST(Separation, EnclosedRegionIsCertifiedExhaustive) {
  // The l1-sphere of radius 2 around 1 in Z^2 encloses B(1, 1).
  const GroupModel m = z2();
  SwampCertificate c;
  c.width = 1;
  c.center = m.identity();
  const Ball b = ball(m, 2);
  for (const Element& g : b.members()) {
    if (b.depth_of(g) == 2) c.swamp.push_back(g);
  }
  c.witnesses = {m.parse("a"), m.parse("aaaa")};
  const SeparationResult r = verify_separation(c, m, 5);
  EXPECT_EQ(r.verdict, SeparationVerdict::CertifiedExhaustive);
  EXPECT_EQ(r.explored, 5u);
}

TEST(Separation, CylinderOnProductIsEvidence) {
  const Order o = f2_leading();
  const SwampCertificate c = product_cylinder_certificate(o, 1, 5);
  for (const Element& s : c.swamp) EXPECT_EQ(o.sign(s), Sign::Negative);
  for (const Element& w : c.witnesses) EXPECT_EQ(o.sign(w), Sign::Positive);
  EXPECT_EQ(verify_separation(c, o.model(), 5).verdict, SeparationVerdict::Evidence);
}

TEST(CofinalPath, Examples) {
  const Order o = z_leading();
  const GroupModel& m = o.model();
  const RPath p = cofinal_positive_path(o, m.parse("Ac"), m.parse("bc"));
  EXPECT_TRUE(is_r_path(m, p));
  EXPECT_TRUE(is_positive_path(o, p));
  EXPECT_EQ(p.width, 1);

  const RPath single = cofinal_positive_path(o, m.parse("ac"), m.parse("ac"));
  EXPECT_EQ(single.points.size(), 1u);

  const RPath vertical = cofinal_positive_path(o, m.parse("c"), m.parse("ccc"));
  EXPECT_TRUE(is_positive_path(o, vertical));
  for (const Element& g : vertical.points) EXPECT_TRUE(m.split(g).first.is_identity());
}

TEST(CofinalPath, NeedsDeclaredCenterAndPositiveEnds) {
  const Order o = magnus_f2();
  EXPECT_THROW(cofinal_positive_path(o, o.model().parse("a"), o.model().parse("b")), NoDeclaredCofinalCenter);
  const Order z = z_leading();
  EXPECT_THROW(cofinal_positive_path(z, z.model().parse("C"), z.model().parse("c")), Error);
}

TEST(CofinalPath, RandomPositivePairs) {
  const Order o = z_leading();
  const GroupModel& m = o.model();
  const Ball b = ball(m, 4);
  std::vector<Element> pos;
  for (const Element& g : b.members()) {
    if (o.sign(g) == Sign::Positive) pos.push_back(g);
  }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, pos.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const Element& g = pos[pick(rng)];
    const Element& h = pos[pick(rng)];
    const RPath p = cofinal_positive_path(o, g, h);
    EXPECT_EQ(p.points.front(), g);
    EXPECT_EQ(p.points.back(), h);
    EXPECT_TRUE(is_r_path(m, p));
    EXPECT_TRUE(is_positive_path(o, p));
  }
}

TEST(ProductPath, LexOnZTimesZ) {
  const GroupModel m = GroupModel::direct_product(GroupModel::free_abelian(1), GroupModel::free_abelian(1));
  const Order o = Order::lex_pair(m, z_order(), z_order(), 0);
  const Element g = m.parse("b");
  const Element h = m.parse("aBBBBB");
  const RPath p = product_positive_path(o, g, h, 1, 6);
  EXPECT_EQ(p.points.front(), g);
  EXPECT_EQ(p.points.back(), h);
  EXPECT_TRUE(is_r_path(m, p));
  EXPECT_TRUE(is_positive_path(o, p));
  EXPECT_EQ(product_positive_path(o, g, g, 1, 6).points.size(), 1u);
}

TEST(ProductPath, RefusesDisconnectedLeadingFactor) {
  const Order o = f2_leading();
  const GroupModel& m = o.model();
  EXPECT_THROW(product_positive_path(o, m.parse("a"), m.parse("b"), 1, 4), FactorNotConnectedAtScale);
}

TEST(Survey, Examples) {
  const SurveyReport z = connectivity_survey(irrational_z2(), 1, {2, 4, 6});
  EXPECT_EQ(z.counts, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(z.summary, "Prieto-consistent at (1, 6)");
  EXPECT_TRUE(z.stable);

  const SurveyReport f = connectivity_survey(magnus_f2(), 1, {4, 5, 6});
  for (auto c : f.counts) EXPECT_GE(c, 2u);
  EXPECT_EQ(f.verdict, SurveyVerdict::HuchaCertified);
  EXPECT_EQ(f.summary, "Hucha-certified at width 1");
  ASSERT_TRUE(f.certificate.has_value());

  const SurveyReport p = connectivity_survey(z_leading(), 1, {3, 4, 5});
  EXPECT_EQ(p.counts, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(p.confined_counts, (std::vector<std::size_t>{3, 7, 18}));
  EXPECT_EQ(p.verdict, SurveyVerdict::PrietoConsistent);
}
