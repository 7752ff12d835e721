#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "permrank/permmatrix.hpp"

namespace permrank::twoway {

inline constexpr char kLeftEnd = '<';
inline constexpr char kRightEnd = '>';

enum class Move { Left, Right };

struct Transition {
    int to = 0;
    Move move = Move::Right;
    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic two-way automaton over single-character symbols, with the
/// input written between the endmarkers '<' and '>'. The head starts on '<'
/// in the initial state. A missing transition halts the machine; it accepts
/// iff it halts in an accepting state. Transitions never move off the tape.
class TwoWayDFA {
public:
    TwoWayDFA(std::vector<std::string> states, std::string alphabet, int initial, std::vector<int> accepting);

    /// Reads the automaton JSON schema; throws std::invalid_argument on any
    /// inconsistency.
    static TwoWayDFA from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    /// Adds a transition; `symbol` is an alphabet letter or an endmarker.
    void set_transition(int state, char symbol, int to, Move move);

    int num_states() const { return static_cast<int>(states_.size()); }
    const std::string& alphabet() const { return alphabet_; }
    const std::vector<std::string>& state_names() const { return states_; }
    int initial() const { return initial_; }
    bool is_accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }

    const std::optional<Transition>& transition(int state, char symbol) const;

    /// Throws std::invalid_argument if w uses a symbol outside the alphabet.
    void check_word(std::string_view w) const;

private:
    int symbol_index(char symbol) const;

    std::vector<std::string> states_;
    std::string alphabet_;
    int initial_;
    std::vector<bool> accepting_;
    std::vector<std::optional<Transition>> delta_;  // [state * (|alphabet| + 2) + symbol index]
};

enum class Outcome { Accept, Reject, Loop };

std::string to_string(Outcome o);

struct Configuration {
    int state = 0;
    int position = 0;  // 0 is '<', |w| + 1 is '>'
};

struct RunResult {
    Outcome outcome = Outcome::Reject;
    std::size_t steps = 0;
    std::vector<Configuration> trace;
};

/// Simulates on <w>. A computation still running after |Q|(|w|+2) steps has
/// repeated a configuration and is reported as a loop.
RunResult run(const TwoWayDFA& a, std::string_view w, bool record_trace = false);

bool accepts(const TwoWayDFA& a, std::string_view w);

/// Result of a computation on a prefix: a state >= 0 when the head leaves the
/// prefix to the right, or one of the halting codes below.
inline constexpr int kHaltAccept = -1;
/// Halted in a rejecting state, or looped, inside the prefix.
inline constexpr int kHaltReject = -2;

/// Crossing summary of <u: where the computation from the left end first
/// leaves to the right, and where it leaves after re-entering the last cell
/// from the right in each state. Equal behaviors mean equal futures.
struct Behavior {
    int left_entry = kHaltReject;
    std::vector<int> reentry;

    friend bool operator==(const Behavior&, const Behavior&) = default;
    friend auto operator<=>(const Behavior&, const Behavior&) = default;
};

/// Behavior of <u by direct simulation on the prefix tape.
Behavior prefix_behavior(const TwoWayDFA& a, std::string_view u);

/// Behavior of <uc from the behavior of <u, without looking at u.
Behavior extend(const TwoWayDFA& a, const Behavior& b, char c);

/// Number of distinct behaviors an n-state automaton can have: a halting
/// code, or an exit state paired with a re-entry table over Q + 2 outcomes,
/// i.e. n (n+2)^n + 2. Under halt-in-accepting acceptance this is the
/// ceiling on to_dfa's state count; dfa_bound(n) is not (see README).
mpz_class behavior_space_size(int n);

/// Whether <u w'> accepts for the empty remainder, i.e. whether <u> accepts,
/// given the behavior of <u.
bool accepts_from(const TwoWayDFA& a, const Behavior& b);

struct OneWayDFA {
    std::string alphabet;
    int initial = 0;
    std::vector<std::vector<int>> next;  // [state][symbol index]
    std::vector<bool> accepting;

    int num_states() const { return static_cast<int>(next.size()); }
    bool accepts(std::string_view w) const;
};

inline constexpr int kMaxConvertibleStates = 5;
inline constexpr std::size_t kDefaultDfaStateBudget = 200000;

struct Conversion {
    OneWayDFA dfa;
    std::vector<Behavior> behaviors;  // behaviors[i] labels DFA state i
};

/// One-way DFA whose states are the reachable behaviors. Throws
/// std::invalid_argument above kMaxConvertibleStates states and
/// std::length_error when more than `state_budget` behaviors are reachable.
Conversion to_dfa(const TwoWayDFA& a, int max_states = kMaxConvertibleStates,
                  std::size_t state_budget = kDefaultDfaStateBudget);

/// Minimal equivalent DFA (Moore partition refinement). Assumes all states reachable.
OneWayDFA minimize(const OneWayDFA& dfa);

struct CommMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    BinaryMatrix entries;
};

/// Entry (u, v) is 1 iff a accepts uv. With `dedup`, repeated rows and
/// columns are dropped, keeping the first label of each.
CommMatrix comm_matrix(const TwoWayDFA& a, const std::vector<std::string>& prefixes,
                       const std::vector<std::string>& suffixes, bool dedup = false);

/// Rank over Q of the communication matrix: every UFA for L(a) has at least
/// this many states.
std::size_t schmidt_lower_bound(const TwoWayDFA& a, const std::vector<std::string>& prefixes,
                                const std::vector<std::string>& suffixes);

/// All words of length <= max_len over the alphabet, shortest first, then lexicographic.
std::vector<std::string> words_up_to(const std::string& alphabet, int max_len);

/// Random automaton: each (state, symbol) transition present with probability
/// `density`, with uniform target and direction (forced inward at endmarkers).
TwoWayDFA random_automaton(int states, const std::string& alphabet, std::mt19937_64& rng, double density = 0.85);

}  // namespace permrank::twoway
