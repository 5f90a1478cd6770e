#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conescope/cone_geometry.hpp"
#include "conescope/dfa.hpp"
#include "conescope/group_model.hpp"

namespace conescope {

// All accepted words of length <= max_length, in shortlex order, with their
// evaluations.
struct LanguageSample {
  int max_length = 0;
  std::vector<Word> words;
  std::unordered_map<Element, std::vector<Word>, ElementHash> evaluations;
};

LanguageSample language_sample(const ConeDfa& d, const GroupModel& m, int max_length);

// The path 1, v_0, ..., v_n = ev(w) with v_i = ev(w_i w_i') where w_i' is the
// completion of the i-th prefix. Consecutive repeats are dropped.
struct Interpolation {
  RPath path;
  // Accepted word evaluating to each point; nullopt for the leading identity.
  std::vector<std::optional<Word>> witnesses;
};

Interpolation regular_interpolation(const ConeDfa& d, const GroupModel& m, const Word& w);

// Exact membership in ev(L) for free groups. A word evaluates to g iff it
// is y1 u1 y2 ... with y1 y2 ... the reduced word of g and every u_i
// trivial in F; the relation "some trivial word leads from p to q" is the
// least fixpoint of p ~ p, transitivity and p -x-> p' ~ q' -x^-1-> q.
class FreeMembership {
 public:
  FreeMembership(const ConeDfa& d, const GroupModel& free);
  bool contains(const Element& g) const;
  bool trivial_path(ConeDfa::State p, ConeDfa::State q) const { return null_[p][q]; }

 private:
  std::vector<bool> close(std::vector<bool> states) const;
  ConeDfa dfa_;
  GroupModel model_;
  std::vector<std::vector<bool>> null_;
};

enum class ConeVerdict { Pass, Fail, Unknown };
std::string to_string(ConeVerdict v);

struct ConeCounterexample {
  enum class Kind { IdentityAccepted, BothSigns, NeitherSign, NotClosed };
  Kind kind;
  std::vector<Element> elements;
};
std::string to_string(ConeCounterexample::Kind k);

struct ConeDfaReport {
  int radius = 0;
  int max_length = 0;
  // "exact" for free groups, "bounded" (accepted words up to max_length)
  // otherwise.
  bool exact = false;
  ConeVerdict verdict = ConeVerdict::Pass;
  std::vector<Element> in_set;  // sorted shortlex, elements of B(1, R)
  std::map<Element, Word, ShortlexElementLess> witnesses;
  std::vector<Element> unknown;  // g with neither g nor g^-1 reached
  std::vector<ConeCounterexample> counterexamples;
};

// Does ev(L) look like a positive cone on B(1, R)?
ConeDfaReport verify_cone_dfa(const ConeDfa& d, const GroupModel& m, int radius, int max_length);

struct QuasigeodesicResult {
  bool passed = true;
  std::size_t words_checked = 0;
  // First violation in shortlex word order, then (i, j) order.
  std::optional<Word> word;
  int i = 0;
  int j = 0;
  std::size_t distance = 0;
};

// Checks |i - j| / lambda - c <= d(ev(w_i), ev(w_j)) for every accepted w
// with |w| <= max_length.
QuasigeodesicResult quasigeodesic_check(const ConeDfa& d, const GroupModel& m, double lambda, double c,
                                        int max_length);

}  // namespace conescope
