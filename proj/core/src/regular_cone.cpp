#include "conescope/regular_cone.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "conescope/errors.hpp"

namespace conescope {

namespace {

void require_alphabet(const ConeDfa& d, const GroupModel& m) {
  if (d.generator_count() != m.generator_count()) {
    throw ModelMismatch("automaton alphabet has " + std::to_string(d.generator_count()) + " generators, " +
                        m.name() + " has " + std::to_string(m.generator_count()));
  }
}

// Accepted words of length <= max_length reaching B(1, radius), found by
// breadth-first search over (state, element) pairs. A pair whose element is
// farther than radius + (remaining letters) can never come back.
std::map<Element, Word, ShortlexElementLess> bounded_accepted(const ConeDfa& d, const GroupModel& m, int radius,
                                                              int max_length) {
  std::map<Element, Word, ShortlexElementLess> found;
  const auto live = d.live_states();
  if (!live[d.initial()]) return found;

  struct Node {
    ConeDfa::State state;
    Element element;
    Word word;
  };
  std::vector<std::unordered_set<Element, ElementHash>> seen(d.state_count());
  std::deque<Node> queue;
  queue.push_back({d.initial(), m.identity(), {}});
  seen[d.initial()].insert(m.identity());
  std::uint64_t visited = 0;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    check_cap(++visited);
    const int depth = static_cast<int>(node.word.size());
    if (d.accepting(node.state) && static_cast<int>(node.element.word.size()) <= radius) {
      found.emplace(node.element, node.word);
    }
    if (depth == max_length) continue;
    const int slack = radius + (max_length - depth - 1);
    for (Letter l : d.letters()) {
      const ConeDfa::State next = d.next(node.state, l);
      if (!live[next]) continue;
      Word w = node.word;
      w.push_back(l);
      Element e = m.normal_form(concat(node.element.word, std::span<const Letter>(&l, 1)));
      if (static_cast<int>(e.word.size()) > slack) continue;
      if (!seen[next].insert(e).second) continue;
      queue.push_back({next, std::move(e), std::move(w)});
    }
  }
  return found;
}

}  // namespace

LanguageSample language_sample(const ConeDfa& d, const GroupModel& m, int max_length) {
  require_alphabet(d, m);
  LanguageSample sample;
  sample.max_length = max_length;
  const auto live = d.live_states();
  std::vector<std::pair<Word, ConeDfa::State>> layer;
  if (live[d.initial()]) layer.emplace_back(Word{}, d.initial());
  std::uint64_t stored = 0;
  for (int len = 0; len <= max_length && !layer.empty(); ++len) {
    std::vector<std::pair<Word, ConeDfa::State>> next_layer;
    for (const auto& [w, s] : layer) {
      if (d.accepting(s)) {
        sample.words.push_back(w);
        sample.evaluations[m.normal_form(w)].push_back(w);
      }
      if (len == max_length) continue;
      for (Letter l : d.letters()) {
        const ConeDfa::State t = d.next(s, l);
        if (!live[t]) continue;
        Word ext = w;
        ext.push_back(l);
        check_cap(++stored);
        next_layer.emplace_back(std::move(ext), t);
      }
    }
    layer = std::move(next_layer);
  }
  return sample;
}

Interpolation regular_interpolation(const ConeDfa& d, const GroupModel& m, const Word& w) {
  require_alphabet(d, m);
  if (!dfa_run(d, w).accepted) throw NotAccepted(format_word(w));
  const int width = connectivity_radius(d);

  Interpolation out;
  out.path.width = width;
  out.path.points.push_back(m.identity());
  out.witnesses.emplace_back(std::nullopt);
  ConeDfa::State state = d.initial();
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (i > 0) state = d.next(state, w[i - 1]);
    const auto completion = prefix_completion(d, state);
    if (!completion || completion->size() + 1 > d.state_count()) {
      throw std::logic_error("prefix of an accepted word has no short completion");
    }
    Word witness(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    witness.insert(witness.end(), completion->begin(), completion->end());
    Element v = m.normal_form(witness);
    if (out.path.points.back() == v) continue;
    if (m.distance(out.path.points.back(), v) > static_cast<std::size_t>(width)) {
      throw std::logic_error("interpolation gap exceeds 2|S|+1");
    }
    out.path.points.push_back(std::move(v));
    out.witnesses.emplace_back(std::move(witness));
  }
  return out;
}

FreeMembership::FreeMembership(const ConeDfa& d, const GroupModel& free) : dfa_(d), model_(free) {
  if (free.kind() != ModelKind::Free) throw ModelMismatch("exact membership needs a free group");
  require_alphabet(d, free);
  const std::size_t n = d.state_count();
  null_.assign(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) null_[s][s] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (Letter x : d.letters()) {
        const auto p1 = d.next(p, x);
        for (std::size_t q1 = 0; q1 < n; ++q1) {
          if (!null_[p1][q1]) continue;
          const auto q = d.next(q1, x.inverse());
          if (!null_[p][q]) null_[p][q] = changed = true;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t p = 0; p < n; ++p) {
        if (!null_[p][k]) continue;
        for (std::size_t q = 0; q < n; ++q) {
          if (null_[k][q] && !null_[p][q]) null_[p][q] = changed = true;
        }
      }
    }
  }
}

std::vector<bool> FreeMembership::close(std::vector<bool> states) const {
  std::vector<bool> out(states.size(), false);
  for (std::size_t p = 0; p < states.size(); ++p) {
    if (!states[p]) continue;
    for (std::size_t q = 0; q < states.size(); ++q) out[q] = out[q] || null_[p][q];
  }
  return out;
}

bool FreeMembership::contains(const Element& g) const {
  model_.require_same(g);
  const std::size_t n = dfa_.state_count();
  std::vector<bool> states(n, false);
  states[dfa_.initial()] = true;
  states = close(std::move(states));
  for (Letter y : g.word) {
    std::vector<bool> next(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (states[s]) next[dfa_.next(s, y)] = true;
    }
    states = close(std::move(next));
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (states[s] && dfa_.accepting(s)) return true;
  }
  return false;
}

std::string to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::Pass:
      return "PASS";
    case ConeVerdict::Fail:
      return "FAIL";
    case ConeVerdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(ConeCounterexample::Kind k) {
  switch (k) {
    case ConeCounterexample::Kind::IdentityAccepted:
      return "identity-accepted";
    case ConeCounterexample::Kind::BothSigns:
      return "element-and-inverse-accepted";
    case ConeCounterexample::Kind::NeitherSign:
      return "neither-element-nor-inverse-accepted";
    case ConeCounterexample::Kind::NotClosed:
      return "not-closed-under-products";
  }
  return "unknown";
}

ConeDfaReport verify_cone_dfa(const ConeDfa& d, const GroupModel& m, int radius, int max_length) {
  require_alphabet(d, m);
  const Ball b = ball(m, radius);

  ConeDfaReport report;
  report.radius = radius;
  report.max_length = max_length;
  report.exact = m.kind() == ModelKind::Free;

  std::unordered_set<Element, ElementHash> in;
  if (report.exact) {
    const FreeMembership membership(d, m);
    for (const Element& g : b.members()) {
      if (membership.contains(g)) in.insert(g);
    }
  } else {
    report.witnesses = bounded_accepted(d, m, radius, max_length);
    for (const auto& [g, w] : report.witnesses) in.insert(g);
  }
  for (const Element& g : b.members()) {
    if (in.count(g)) report.in_set.push_back(g);
  }

  auto fail = [&](ConeCounterexample::Kind kind, std::vector<Element> elements) {
    report.counterexamples.push_back({kind, std::move(elements)});
  };

  if (in.count(m.identity())) fail(ConeCounterexample::Kind::IdentityAccepted, {m.identity()});
  for (const Element& g : b.members()) {
    if (g.is_identity()) continue;
    const Element inv = m.invert(g);
    if (!ShortlexElementLess{}(g, inv)) continue;
    const bool gi = in.count(g) != 0;
    const bool ii = in.count(inv) != 0;
    if (gi && ii) {
      fail(ConeCounterexample::Kind::BothSigns, {g, inv});
    } else if (!gi && !ii) {
      if (report.exact) {
        fail(ConeCounterexample::Kind::NeitherSign, {g, inv});
      } else {
        report.unknown.push_back(g);
      }
    }
  }
  for (const Element& g : report.in_set) {
    for (const Element& h : report.in_set) {
      const Element gh = m.multiply(g, h);
      if (gh.is_identity() || !b.contains(gh) || in.count(gh)) continue;
      // Undecided products are already listed as unknown.
      if (report.exact || in.count(m.invert(gh))) fail(ConeCounterexample::Kind::NotClosed, {g, h, gh});
    }
  }

  if (!report.counterexamples.empty()) {
    report.verdict = ConeVerdict::Fail;
  } else if (!report.unknown.empty()) {
    report.verdict = ConeVerdict::Unknown;
  } else {
    report.verdict = ConeVerdict::Pass;
  }
  return report;
}

QuasigeodesicResult quasigeodesic_check(const ConeDfa& d, const GroupModel& m, double lambda, double c,
                                        int max_length) {
  if (lambda < 1.0 || c < 0.0) throw Error("quasigeodesic constants need lambda >= 1 and c >= 0");
  const LanguageSample sample = language_sample(d, m, max_length);
  QuasigeodesicResult result;
  for (const Word& w : sample.words) {
    ++result.words_checked;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const std::span<const Letter> piece(w.data() + i, static_cast<std::size_t>(j - i));
        const std::size_t dist = m.normal_form(piece).word.size();
        if (static_cast<double>(j - i) / lambda - c > static_cast<double>(dist) + 1e-9) {
          result.passed = false;
          result.word = w;
          result.i = i;
          result.j = j;
          result.distance = dist;
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace conescope
