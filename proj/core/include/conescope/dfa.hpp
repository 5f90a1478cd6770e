#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conescope/word.hpp"

namespace conescope {

// Deterministic automaton (S, A, s0, X, tau) over the symmetric alphabet of
// `generators` generators. tau is total.
class ConeDfa {
 public:
  using State = std::size_t;

  // transitions[s][letter.code] is the successor of s.
  ConeDfa(std::vector<std::string> state_names, State initial, std::vector<bool> accepting, int generators,
          std::vector<std::vector<State>> transitions);

  std::size_t state_count() const { return names_.size(); }
  const std::string& state_name(State s) const { return names_.at(s); }
  std::optional<State> find_state(std::string_view name) const;
  State initial() const { return initial_; }
  bool accepting(State s) const { return accepting_.at(s); }
  int generator_count() const { return generators_; }
  std::span<const Letter> letters() const { return letters_; }
  State next(State s, Letter l) const;

  // States from which some accepting state is reachable.
  std::vector<bool> live_states() const;

 private:
  std::vector<std::string> names_;
  State initial_;
  std::vector<bool> accepting_;
  int generators_;
  std::vector<Letter> letters_;
  std::vector<std::vector<State>> transitions_;
};

struct DfaRun {
  ConeDfa::State state;
  bool accepted;
};

// Left-to-right fold of tau from s0. Throws UnknownLetter.
DfaRun dfa_run(const ConeDfa& d, std::span<const Letter> w);
DfaRun dfa_run_from(const ConeDfa& d, ConeDfa::State s, std::span<const Letter> w);

// Shortest word leading from s to an accepting state, ties broken by the
// letter order; nullopt if no accepting state is reachable.
std::optional<Word> prefix_completion(const ConeDfa& d, ConeDfa::State s);

// Width 2|S| + 1 of the interpolating paths through ev(L).
int connectivity_radius(const ConeDfa& d);

// Accepts exactly the canonical words x^i y^j of positive elements of Z^2
// in the lexicographic order with x leading. Five states.
ConeDfa z2_lex_automaton();
// Accepts (b|B)* a a* ∪ b b* over the Klein bottle alphabet {a, b}. Five
// states, the last one a sink.
ConeDfa klein_cone_automaton();
// Accepts every word.
ConeDfa all_accepting_automaton(int generators);
// Accepts (x x^-1)* x over the rank-`generators` alphabet.
ConeDfa backtracking_automaton(int generators);
// Uniform random transitions, each state accepting with probability 1/2,
// initial state 0.
ConeDfa random_dfa(int states, int generators, std::mt19937_64& rng);

}  // namespace conescope
