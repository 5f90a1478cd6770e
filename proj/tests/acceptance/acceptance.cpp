// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conescope/cone_geometry.hpp"
#include "conescope/dfa.hpp"
#include "conescope/group_model.hpp"
#include "conescope/order.hpp"
#include "conescope/regular_cone.hpp"
#include "determinism.hpp"
#include "fixtures.hpp"

using namespace conescope;
using namespace conescope::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

struct NamedOrder {
  const char* label;
  Order order;
  int ray_radius;
  int axiom_radius;
};

std::vector<NamedOrder> criterion_orders() {
  return {{"magnus/F2", magnus_f2(), 5, 5},
          {"hyperplane(1,sqrt2)/Z^2", irrational_z2(), 6, 6},
          {"klein/K", klein_order(), 6, 6},
          {"F2-leading/F2xZ", f2_leading(), 6, 4},
          {"Z-leading/F2xZ", z_leading(), 6, 4}};
}

void order_axioms(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& o : criterion_orders()) {
    const AxiomReport r = verify_order_axioms(o.order, o.axiom_radius);
    out.require(r.passed(), o.label);
    out.detail << " " << o.label << "@R=" << o.axiom_radius << ":" << r.elements_checked;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < 10.0, "runtime under 10 s");
  const AxiomReport magnus = verify_order_axioms(magnus_f2(), 5);
  out.require(magnus.elements_checked == 485, "485 elements in B(1,5) of F2");
}

void maxima_ray(Outcome& out) {
  for (const auto& o : criterion_orders()) {
    const RayReport r = verify_maxima_ray(o.order, o.ray_radius);
    out.require(r.passed(), o.label);
    out.require(r.checks.size() >= 3, std::string(o.label) + " ran all checks");
    out.detail << " " << o.label << ":g" << o.ray_radius << "=" << to_string(r.maxima.back());
  }
}

void hucha_certificate(Outcome& out) {
  const Order order = magnus_f2();
  const GroupModel m = order.model();
  const std::size_t expected[] = {5, 17, 53};
  std::mt19937_64 rng(20240501);
  for (int r = 1; r <= 3; ++r) {
    const SwampCertificate cert = tree_swamp_certificate(order, r);
    const SeparationResult sep = verify_separation(cert, m, r + 8);
    out.require(sep.verdict == SeparationVerdict::CertifiedTree, "certified-tree at r=" + std::to_string(r));
    out.require(cert.swamp.size() == expected[r - 1], "|S| at r=" + std::to_string(r));
    out.require(cert.swamp.size() == ball(m, r).size(), "|S| = |B(1,r)| by BFS");
    for (const Element& s : cert.swamp) out.require(order.sign(s) == Sign::Negative, "S negative");
    const std::set<Word> swamp_words = [&] {
      std::set<Word> s;
      for (const Element& e : cert.swamp) s.insert(e.word);
      return s;
    }();
    int meets = 0;
    for (int i = 0; i < 100; ++i) {
      const RPath p = sample_r_path(m, cert.witnesses[0], cert.witnesses[1], r, r + 8, rng);
      out.require(is_r_path(m, p), "sampled path is an r-path");
      bool hit = false;
      for (const Element& e : p.points) hit = hit || swamp_words.count(e.word) != 0;
      meets += hit ? 1 : 0;
    }
    out.require(meets == 100, "every sampled path meets S at r=" + std::to_string(r));
    out.detail << " r=" << r << ":|S|=" << cert.swamp.size() << ",paths " << meets << "/100";
  }
}

void prieto_z2(Outcome& out) {
  for (const auto& [label, order] : {std::pair{"irrational", irrational_z2()}, std::pair{"lex", lex_z2()}}) {
    const SurveyReport s = connectivity_survey(order, 1, {2, 4, 6});
    out.require(s.counts == std::vector<std::size_t>{1, 1, 1}, label);
    out.require(s.verdict == SurveyVerdict::PrietoConsistent, std::string(label) + " verdict");
    out.detail << " " << label << ":" << s.summary;
  }
}

void f2_times_z_dichotomy(Outcome& out) {
  const Order zl = z_leading();
  const GroupModel m = zl.model();
  const SurveyReport s = connectivity_survey(zl, 1, {3, 4, 5});
  out.require(s.counts == std::vector<std::size_t>{1, 1, 1}, "Z-leading single component");
  out.detail << " Z-leading counts=" << s.counts[0] << "," << s.counts[1] << "," << s.counts[2]
             << " (confined " << s.confined_counts[0] << "," << s.confined_counts[1] << "," << s.confined_counts[2]
             << ")";

  const Ball b = ball(m, 4);
  std::vector<Element> positives;
  for (const Element& g : b.members()) {
    if (zl.sign(g) == Sign::Positive) positives.push_back(g);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, positives.size() - 1);
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    const Element& g = positives[pick(rng)];
    const Element& h = positives[pick(rng)];
    const RPath p = cofinal_positive_path(zl, g, h);
    const bool good = p.points.front() == g && p.points.back() == h && is_r_path(m, p) && is_positive_path(zl, p);
    ok += good ? 1 : 0;
  }
  out.require(ok == 50, "cofinal positive paths");
  out.detail << "; cofinal paths " << ok << "/50";

  const Order fl = f2_leading();
  const SurveyReport fs = connectivity_survey(fl, 1, {5});
  out.require(fs.counts[0] >= 2 && fs.confined_counts[0] >= 2, "F2-leading has >= 2 components");
  out.require(fs.separation == SeparationVerdict::Evidence, "F2-leading separation is evidence");
  out.detail << "; F2-leading components=" << fs.counts[0] << " separation="
             << (fs.separation ? to_string(*fs.separation) : std::string("none"));
}

void regular_cones(Outcome& out) {
  struct Case {
    const char* label;
    ConeDfa dfa;
    Order order;
  };
  for (const Case& c : {Case{"Z^2-lex", z2_lex_automaton(), lex_z2()}, Case{"klein", klein_cone_automaton(), klein_order()}}) {
    const GroupModel& m = c.order.model();
    const ConeDfaReport r = verify_cone_dfa(c.dfa, m, 4, 16);
    out.require(r.verdict == ConeVerdict::Pass, std::string(c.label) + " PASS");
    std::vector<Element> expected;
    const Ball b = ball(m, 4);
    for (const Element& g : b.members()) {
      if (c.order.sign(g) == Sign::Positive) expected.push_back(g);
    }
    out.require(r.in_set == expected, std::string(c.label) + " IN-set matches the order");

    const int width = connectivity_radius(c.dfa);
    const LanguageSample sample = language_sample(c.dfa, m, 8);
    std::size_t max_gap = 0;
    for (const Word& w : sample.words) {
      const Interpolation ip = regular_interpolation(c.dfa, m, w);
      for (std::size_t i = 1; i < ip.path.points.size(); ++i) {
        max_gap = std::max(max_gap, m.distance(ip.path.points[i - 1], ip.path.points[i]));
      }
    }
    out.require(max_gap <= static_cast<std::size_t>(width), std::string(c.label) + " interpolation gaps");
    out.detail << " " << c.label << ":" << to_string(r.verdict) << ",|IN|=" << r.in_set.size() << ",words<=8="
               << sample.words.size() << ",max gap " << max_gap << "<=" << width;
  }
}

void no_regular_cone_f2(Outcome& out) {
  const GroupModel m = f2();
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<int> states(1, 4);
  int failed = 0;
  int unknown_first = 0;
  for (int i = 0; i < 200; ++i) {
    const ConeDfa d = random_dfa(states(rng), 2, rng);
    bool fail = false;
    for (int radius = 1; radius <= 4 && !fail; ++radius) {
      const ConeDfaReport r = verify_cone_dfa(d, m, radius, 4 * radius);
      if (r.verdict == ConeVerdict::Unknown) ++unknown_first;
      fail = r.verdict == ConeVerdict::Fail;
    }
    failed += fail ? 1 : 0;
  }
  out.require(failed == 200, "every random automaton fails");
  out.detail << " " << failed << "/200 failed at some R<=4 (statistical demonstration)";
}

void quasigeodesic(Outcome& out) {
  const QuasigeodesicResult lex = quasigeodesic_check(z2_lex_automaton(), z2(), 1.0, 0.0, 8);
  out.require(lex.passed, "Z^2-lex automaton is geodesic");
  const QuasigeodesicResult back = quasigeodesic_check(backtracking_automaton(2), f2(), 1.0, 0.0, 8);
  out.require(!back.passed && back.word && format_word(*back.word) == "aAa" && back.i == 0 && back.j == 2,
              "backtracking automaton fails at the first prefix pair");
  out.detail << " Z^2-lex: PASS over " << lex.words_checked << " words; backtracking: FAIL at ("
             << (back.word ? format_word(*back.word) : "-") << ", " << back.i << ", " << back.j << ")";
}

void determinism(Outcome& out) {
  const DeterminismSummary s = check_report_determinism();
  out.require(s.mismatches.empty(), "identical reports");
  for (const auto& m : s.mismatches) out.detail << " mismatch:" << m;
  out.detail << " " << s.runs << " report sets compared (repeat + reversed traversal)";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"1 order axioms", order_axioms},
      {"2 maxima ray", maxima_ray},
      {"3 tree swamp certificate for F2", hucha_certificate},
      {"4 connected hyperplane cones on Z^2", prieto_z2},
      {"5 F2 x Z dichotomy", f2_times_z_dichotomy},
      {"6 regular cone verification", regular_cones},
      {"7 random automata over F2 fail", no_regular_cone_f2},
      {"8 quasigeodesic check", quasigeodesic},
      {"9 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    failures += out.passed ? 0 : 1;
    std::printf("%s  criterion %s:%s\n", out.passed ? "PASS" : "FAIL", name, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
