#include "conescope/dfa.hpp"

#include <deque>

#include "conescope/errors.hpp"

namespace conescope {

ConeDfa::ConeDfa(std::vector<std::string> state_names, State initial, std::vector<bool> accepting,
                 int generators, std::vector<std::vector<State>> transitions)
    : names_(std::move(state_names)),
      initial_(initial),
      accepting_(std::move(accepting)),
      generators_(generators),
      letters_(alphabet_letters(generators)),
      transitions_(std::move(transitions)) {
  if (names_.empty()) throw InvalidDescriptor("automaton needs at least one state");
  if (generators < 1 || generators > kMaxGenerators) throw InvalidDescriptor("bad alphabet size");
  if (initial_ >= names_.size()) throw InvalidDescriptor("initial state out of range");
  if (accepting_.size() != names_.size() || transitions_.size() != names_.size()) {
    throw InvalidDescriptor("state table size mismatch");
  }
  for (const auto& row : transitions_) {
    if (row.size() != letters_.size()) throw InvalidDescriptor("transition function is not total");
    for (State t : row) {
      if (t >= names_.size()) throw InvalidDescriptor("transition target out of range");
    }
  }
}

std::optional<ConeDfa::State> ConeDfa::find_state(std::string_view name) const {
  for (State s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return s;
  }
  return std::nullopt;
}

ConeDfa::State ConeDfa::next(State s, Letter l) const {
  if (l.index() >= generators_) throw UnknownLetter(std::string(1, letter_char(l)) + " is not in the automaton alphabet");
  return transitions_.at(s)[l.code];
}

std::vector<bool> ConeDfa::live_states() const {
  std::vector<bool> live = accepting_;
  for (bool changed = true; changed;) {
    changed = false;
    for (State s = 0; s < names_.size(); ++s) {
      if (live[s]) continue;
      for (State t : transitions_[s]) {
        if (live[t]) {
          live[s] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return live;
}

DfaRun dfa_run_from(const ConeDfa& d, ConeDfa::State s, std::span<const Letter> w) {
  for (Letter l : w) s = d.next(s, l);
  return {s, d.accepting(s)};
}

DfaRun dfa_run(const ConeDfa& d, std::span<const Letter> w) { return dfa_run_from(d, d.initial(), w); }

std::optional<Word> prefix_completion(const ConeDfa& d, ConeDfa::State s) {
  // FIFO BFS expanding letters in order reaches every state first along its
  // shortlex-least word, so the first accepting state dequeued wins.
  std::vector<std::optional<std::pair<ConeDfa::State, Letter>>> parent(d.state_count());
  std::vector<bool> seen(d.state_count(), false);
  std::deque<ConeDfa::State> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const ConeDfa::State cur = queue.front();
    queue.pop_front();
    if (d.accepting(cur)) {
      Word w;
      for (ConeDfa::State t = cur; parent[t]; t = parent[t]->first) w.push_back(parent[t]->second);
      return Word(w.rbegin(), w.rend());
    }
    for (Letter l : d.letters()) {
      const ConeDfa::State t = d.next(cur, l);
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = std::make_pair(cur, l);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

int connectivity_radius(const ConeDfa& d) { return 2 * static_cast<int>(d.state_count()) + 1; }

namespace {

constexpr Letter kA = Letter::generator(0, false);
constexpr Letter kAInv = Letter::generator(0, true);
constexpr Letter kB = Letter::generator(1, false);
constexpr Letter kBInv = Letter::generator(1, true);

// Table with every transition going to `sink`.
std::vector<std::vector<ConeDfa::State>> sink_table(std::size_t states, int generators, ConeDfa::State sink) {
  return std::vector<std::vector<ConeDfa::State>>(states,
                                                  std::vector<ConeDfa::State>(2 * static_cast<std::size_t>(generators), sink));
}

}  // namespace

ConeDfa z2_lex_automaton() {
  // s0 --a--> sx, sx --a--> sx, {s0, sx} --b--> sy+, sx --B--> sy-,
  // sy+ --b--> sy+, sy- --B--> sy-, everything else to the sink.
  enum : ConeDfa::State { s0, sx, sy_pos, sy_neg, sink };
  auto t = sink_table(5, 2, sink);
  t[s0][kA.code] = sx;
  t[s0][kB.code] = sy_pos;
  t[sx][kA.code] = sx;
  t[sx][kB.code] = sy_pos;
  t[sx][kBInv.code] = sy_neg;
  t[sy_pos][kB.code] = sy_pos;
  t[sy_neg][kBInv.code] = sy_neg;
  return ConeDfa({"s0", "sx", "sy+", "sy-", "sink"}, s0, {false, true, true, true, false}, 2, std::move(t));
}

ConeDfa klein_cone_automaton() {
  // spb: pure positive b-run; mixed: any b-run containing B; sa: a-run.
  enum : ConeDfa::State { s0, spb, mixed, sa, sink };
  auto t = sink_table(5, 2, sink);
  for (ConeDfa::State s : {s0, spb, mixed}) {
    t[s][kA.code] = sa;
    t[s][kBInv.code] = mixed;
  }
  t[s0][kB.code] = spb;
  t[spb][kB.code] = spb;
  t[mixed][kB.code] = mixed;
  t[sa][kA.code] = sa;
  return ConeDfa({"s0", "spb", "mixed", "sa", "sink"}, s0, {false, true, false, true, false}, 2, std::move(t));
}

ConeDfa all_accepting_automaton(int generators) {
  return ConeDfa({"s0"}, 0, {true}, generators, sink_table(1, generators, 0));
}

ConeDfa backtracking_automaton(int generators) {
  enum : ConeDfa::State { s0, sx, sink };
  auto t = sink_table(3, generators, sink);
  t[s0][kA.code] = sx;
  t[sx][kAInv.code] = s0;
  return ConeDfa({"s0", "sx", "sink"}, s0, {false, true, false}, generators, std::move(t));
}

ConeDfa random_dfa(int states, int generators, std::mt19937_64& rng) {
  if (states < 1) throw InvalidDescriptor("automaton needs at least one state");
  std::uniform_int_distribution<ConeDfa::State> target(0, static_cast<ConeDfa::State>(states - 1));
  std::bernoulli_distribution accept(0.5);
  std::vector<std::string> names;
  std::vector<bool> accepting;
  auto t = sink_table(static_cast<std::size_t>(states), generators, 0);
  for (int s = 0; s < states; ++s) {
    names.push_back("s" + std::to_string(s));
    accepting.push_back(accept(rng));
    for (auto& cell : t[static_cast<std::size_t>(s)]) cell = target(rng);
  }
  return ConeDfa(std::move(names), 0, std::move(accepting), generators, std::move(t));
}

}  // namespace conescope
