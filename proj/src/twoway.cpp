#include "permrank/twoway.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace permrank::twoway {

TwoWayDFA::TwoWayDFA(std::vector<std::string> states, std::string alphabet, int initial, std::vector<int> accepting)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), initial_(initial) {
    if (states_.empty()) throw std::invalid_argument("automaton needs at least one state");
    if (initial_ < 0 || initial_ >= num_states()) throw std::invalid_argument("initial state out of range");
    std::set<char> seen;
    for (char c : alphabet_) {
        if (c == kLeftEnd || c == kRightEnd) throw std::invalid_argument("endmarkers cannot be alphabet symbols");
        if (!seen.insert(c).second) throw std::invalid_argument(std::string("duplicate symbol '") + c + "'");
    }
    accepting_.assign(states_.size(), false);
    for (int s : accepting) {
        if (s < 0 || s >= num_states()) throw std::invalid_argument("accepting state out of range");
        accepting_[static_cast<std::size_t>(s)] = true;
    }
    delta_.resize(states_.size() * (alphabet_.size() + 2));
}

int TwoWayDFA::symbol_index(char symbol) const {
    if (symbol == kLeftEnd) return 0;
    if (symbol == kRightEnd) return static_cast<int>(alphabet_.size()) + 1;
    const auto pos = alphabet_.find(symbol);
    if (pos == std::string::npos) throw std::invalid_argument(std::string("symbol '") + symbol + "' not in alphabet");
    return static_cast<int>(pos) + 1;
}

void TwoWayDFA::set_transition(int state, char symbol, int to, Move move) {
    if (state < 0 || state >= num_states() || to < 0 || to >= num_states())
        throw std::invalid_argument("transition references an undeclared state");
    if (symbol == kLeftEnd && move == Move::Left) throw std::invalid_argument("cannot move left from '<'");
    if (symbol == kRightEnd && move == Move::Right) throw std::invalid_argument("cannot move right from '>'");
    auto& slot = delta_[static_cast<std::size_t>(state) * (alphabet_.size() + 2) +
                        static_cast<std::size_t>(symbol_index(symbol))];
    if (slot) throw std::invalid_argument("duplicate transition for state '" + states_[static_cast<std::size_t>(state)] +
                                          "' on '" + std::string(1, symbol) + "'");
    slot = Transition{to, move};
}

const std::optional<Transition>& TwoWayDFA::transition(int state, char symbol) const {
    return delta_[static_cast<std::size_t>(state) * (alphabet_.size() + 2) + static_cast<std::size_t>(symbol_index(symbol))];
}

void TwoWayDFA::check_word(std::string_view w) const {
    for (char c : w)
        if (alphabet_.find(c) == std::string::npos)
            throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
}

TwoWayDFA TwoWayDFA::from_json(const nlohmann::json& j) {
    try {
        const auto names = j.at("states").get<std::vector<std::string>>();
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (!index.emplace(names[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate state name '" + names[i] + "'");
        auto state_of = [&](const nlohmann::json& v) {
            const auto name = v.get<std::string>();
            auto it = index.find(name);
            if (it == index.end()) throw std::invalid_argument("unknown state '" + name + "'");
            return it->second;
        };
        auto symbol_of = [](const nlohmann::json& v) {
            const auto s = v.get<std::string>();
            if (s.size() != 1) throw std::invalid_argument("symbols must be single characters, got '" + s + "'");
            return s[0];
        };

        std::string alphabet;
        for (const auto& s : j.at("alphabet")) alphabet += symbol_of(s);
        std::vector<int> accepting;
        for (const auto& s : j.at("accepting")) accepting.push_back(state_of(s));

        TwoWayDFA a(names, alphabet, state_of(j.at("initial")), accepting);
        for (const auto& t : j.at("delta")) {
            const auto move = t.at("move").get<std::string>();
            if (move != "L" && move != "R") throw std::invalid_argument("move must be \"L\" or \"R\"");
            a.set_transition(state_of(t.at("state")), symbol_of(t.at("symbol")), state_of(t.at("to")),
                             move == "L" ? Move::Left : Move::Right);
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed automaton JSON: ") + e.what());
    }
}

nlohmann::json TwoWayDFA::to_json() const {
    nlohmann::json j;
    j["states"] = states_;
    auto alpha = nlohmann::json::array();
    for (char c : alphabet_) alpha.push_back(std::string(1, c));
    j["alphabet"] = alpha;
    j["initial"] = states_[static_cast<std::size_t>(initial_)];
    auto acc = nlohmann::json::array();
    for (int s = 0; s < num_states(); ++s)
        if (is_accepting(s)) acc.push_back(states_[static_cast<std::size_t>(s)]);
    j["accepting"] = acc;
    auto delta = nlohmann::json::array();
    const std::string symbols = std::string(1, kLeftEnd) + alphabet_ + std::string(1, kRightEnd);
    for (int s = 0; s < num_states(); ++s)
        for (char c : symbols)
            if (const auto& t = transition(s, c))
                delta.push_back({{"state", states_[static_cast<std::size_t>(s)]},
                                 {"symbol", std::string(1, c)},
                                 {"to", states_[static_cast<std::size_t>(t->to)]},
                                 {"move", t->move == Move::Left ? "L" : "R"}});
    j["delta"] = delta;
    return j;
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Accept: return "Accept";
        case Outcome::Reject: return "Reject";
        case Outcome::Loop: return "Loop";
    }
    return "Reject";
}

RunResult run(const TwoWayDFA& a, std::string_view w, bool record_trace) {
    a.check_word(w);
    const auto cell = [&](int pos) -> char {
        if (pos == 0) return kLeftEnd;
        if (pos == static_cast<int>(w.size()) + 1) return kRightEnd;
        return w[static_cast<std::size_t>(pos - 1)];
    };
    const std::size_t budget = static_cast<std::size_t>(a.num_states()) * (w.size() + 2);

    RunResult result;
    int state = a.initial();
    int pos = 0;
    for (;;) {
        if (record_trace) result.trace.push_back({state, pos});
        const auto& t = a.transition(state, cell(pos));
        if (!t) {
            result.outcome = a.is_accepting(state) ? Outcome::Accept : Outcome::Reject;
            return result;
        }
        if (result.steps == budget) {
            result.outcome = Outcome::Loop;
            return result;
        }
        state = t->to;
        pos += t->move == Move::Right ? 1 : -1;
        ++result.steps;
    }
}

bool accepts(const TwoWayDFA& a, std::string_view w) { return run(a, w).outcome == Outcome::Accept; }

namespace {

// Runs on the tape <u from (state, pos) until the head leaves to the right.
int simulate_prefix(const TwoWayDFA& a, std::string_view u, int state, int pos) {
    const int last = static_cast<int>(u.size());
    const std::size_t budget = static_cast<std::size_t>(a.num_states()) * (u.size() + 1);
    for (std::size_t steps = 0;; ++steps) {
        const char symbol = pos == 0 ? kLeftEnd : u[static_cast<std::size_t>(pos - 1)];
        const auto& t = a.transition(state, symbol);
        if (!t) return a.is_accepting(state) ? kHaltAccept : kHaltReject;
        if (steps == budget) return kHaltReject;
        state = t->to;
        pos += t->move == Move::Right ? 1 : -1;
        if (pos > last) return state;
    }
}

// The head is on a cell holding `symbol`, with everything to its left
// summarized by `left`. Returns the state in which it leaves to the right,
// or a halting code. A state repeating at this cell means a loop.
int cross_cell(const TwoWayDFA& a, const Behavior& left, char symbol, int state) {
    std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
    for (;;) {
        if (seen[static_cast<std::size_t>(state)]) return kHaltReject;
        seen[static_cast<std::size_t>(state)] = true;
        const auto& t = a.transition(state, symbol);
        if (!t) return a.is_accepting(state) ? kHaltAccept : kHaltReject;
        if (t->move == Move::Right) return t->to;
        const int back = left.reentry[static_cast<std::size_t>(t->to)];
        if (back < 0) return back;
        state = back;
    }
}

// Once the computation halts inside the prefix it never re-enters it, so the
// re-entry table is dead and is cleared to keep equal futures equal.
Behavior canonical(Behavior b) {
    if (b.left_entry < 0) std::fill(b.reentry.begin(), b.reentry.end(), kHaltReject);
    return b;
}

}  // namespace

Behavior prefix_behavior(const TwoWayDFA& a, std::string_view u) {
    a.check_word(u);
    Behavior b;
    b.left_entry = simulate_prefix(a, u, a.initial(), 0);
    for (int q = 0; q < a.num_states(); ++q)
        b.reentry.push_back(simulate_prefix(a, u, q, static_cast<int>(u.size())));
    return canonical(std::move(b));
}

Behavior extend(const TwoWayDFA& a, const Behavior& b, char c) {
    Behavior next;
    next.left_entry = b.left_entry < 0 ? b.left_entry : cross_cell(a, b, c, b.left_entry);
    next.reentry.reserve(static_cast<std::size_t>(a.num_states()));
    for (int q = 0; q < a.num_states(); ++q) next.reentry.push_back(cross_cell(a, b, c, q));
    return canonical(std::move(next));
}

mpz_class behavior_space_size(int n) {
    if (n < 1) throw std::invalid_argument("behavior_space_size: n must be at least 1");
    mpz_class tables;
    mpz_ui_pow_ui(tables.get_mpz_t(), static_cast<unsigned long>(n + 2), static_cast<unsigned long>(n));
    return n * tables + 2;
}

bool accepts_from(const TwoWayDFA& a, const Behavior& b) {
    if (b.left_entry < 0) return b.left_entry == kHaltAccept;
    // '>' only allows left moves, so cross_cell never reports a right exit here.
    return cross_cell(a, b, kRightEnd, b.left_entry) == kHaltAccept;
}

bool OneWayDFA::accepts(std::string_view w) const {
    int s = initial;
    for (char c : w) {
        const auto pos = alphabet.find(c);
        if (pos == std::string::npos) throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
        s = next[static_cast<std::size_t>(s)][pos];
    }
    return accepting[static_cast<std::size_t>(s)];
}

Conversion to_dfa(const TwoWayDFA& a, int max_states, std::size_t state_budget) {
    if (a.num_states() > max_states)
        throw std::invalid_argument("to_dfa: " + std::to_string(a.num_states()) + " states exceeds the limit of " +
                                    std::to_string(max_states));
    // Before the left endmarker: the computation arrives at '<' in the initial
    // state, and nothing lies further left.
    Behavior outside;
    outside.left_entry = a.initial();
    outside.reentry.assign(static_cast<std::size_t>(a.num_states()), kHaltReject);

    Conversion conv;
    conv.dfa.alphabet = a.alphabet();
    std::map<Behavior, int> index;
    std::queue<int> pending;
    auto intern = [&](Behavior b) {
        auto [it, inserted] = index.try_emplace(b, static_cast<int>(conv.behaviors.size()));
        if (inserted) {
            if (conv.behaviors.size() >= state_budget)
                throw std::length_error("to_dfa: more than " + std::to_string(state_budget) + " reachable behaviors");
            conv.behaviors.push_back(std::move(b));
            conv.dfa.next.emplace_back(a.alphabet().size(), -1);
            pending.push(it->second);
        }
        return it->second;
    };

    conv.dfa.initial = intern(extend(a, outside, kLeftEnd));
    while (!pending.empty()) {
        const int s = pending.front();
        pending.pop();
        for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
            Behavior b = extend(a, conv.behaviors[static_cast<std::size_t>(s)], a.alphabet()[i]);
            const int t = intern(std::move(b));
            conv.dfa.next[static_cast<std::size_t>(s)][i] = t;
        }
    }
    for (const Behavior& b : conv.behaviors) conv.dfa.accepting.push_back(accepts_from(a, b));
    return conv;
}

OneWayDFA minimize(const OneWayDFA& dfa) {
    const std::size_t n = dfa.next.size();
    const std::size_t k = dfa.alphabet.size();
    std::vector<int> block(n);
    for (std::size_t s = 0; s < n; ++s) block[s] = dfa.accepting[s] ? 1 : 0;

    std::size_t blocks = 0;
    for (;;) {
        std::map<std::vector<int>, int> signature_ids;
        std::vector<int> refined(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<int> sig{block[s]};
            for (std::size_t i = 0; i < k; ++i) sig.push_back(block[static_cast<std::size_t>(dfa.next[s][i])]);
            refined[s] = signature_ids.try_emplace(std::move(sig), static_cast<int>(signature_ids.size())).first->second;
        }
        const std::size_t count = signature_ids.size();
        block = std::move(refined);
        if (count == blocks) break;
        blocks = count;
    }

    OneWayDFA min;
    min.alphabet = dfa.alphabet;
    min.initial = block[static_cast<std::size_t>(dfa.initial)];
    min.next.assign(blocks, std::vector<int>(k, 0));
    min.accepting.assign(blocks, false);
    for (std::size_t s = 0; s < n; ++s) {
        const auto b = static_cast<std::size_t>(block[s]);
        for (std::size_t i = 0; i < k; ++i) min.next[b][i] = block[static_cast<std::size_t>(dfa.next[s][i])];
        min.accepting[b] = dfa.accepting[s];
    }
    return min;
}

CommMatrix comm_matrix(const TwoWayDFA& a, const std::vector<std::string>& prefixes,
                       const std::vector<std::string>& suffixes, bool dedup) {
    std::vector<std::vector<int>> rows;
    rows.reserve(prefixes.size());
    for (const auto& u : prefixes) {
        auto& row = rows.emplace_back();
        for (const auto& v : suffixes) row.push_back(accepts(a, u + v) ? 1 : 0);
    }

    CommMatrix m;
    std::vector<std::size_t> keep_rows, keep_cols;
    if (dedup) {
        std::set<std::vector<int>> seen_rows;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (seen_rows.insert(rows[r]).second) keep_rows.push_back(r);
        std::set<std::vector<int>> seen_cols;
        for (std::size_t c = 0; c < suffixes.size(); ++c) {
            std::vector<int> col;
            for (const auto& row : rows) col.push_back(row[c]);
            if (seen_cols.insert(std::move(col)).second) keep_cols.push_back(c);
        }
    } else {
        for (std::size_t r = 0; r < rows.size(); ++r) keep_rows.push_back(r);
        for (std::size_t c = 0; c < suffixes.size(); ++c) keep_cols.push_back(c);
    }

    m.entries = BinaryMatrix(keep_rows.size(), keep_cols.size());
    for (std::size_t i = 0; i < keep_rows.size(); ++i) {
        m.row_labels.push_back(prefixes[keep_rows[i]]);
        for (std::size_t j = 0; j < keep_cols.size(); ++j) m.entries.set(i, j, rows[keep_rows[i]][keep_cols[j]] == 1);
    }
    for (std::size_t c : keep_cols) m.col_labels.push_back(suffixes[c]);
    return m;
}

std::size_t schmidt_lower_bound(const TwoWayDFA& a, const std::vector<std::string>& prefixes,
                                const std::vector<std::string>& suffixes) {
    return rank_exact(comm_matrix(a, prefixes, suffixes, true).entries);
}

std::vector<std::string> words_up_to(const std::string& alphabet, int max_len) {
    std::vector<std::string> out{""};
    std::size_t layer_start = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_start; i < layer_end; ++i)
            for (char c : alphabet) out.push_back(out[i] + c);
        layer_start = layer_end;
    }
    return out;
}

TwoWayDFA random_automaton(int states, const std::string& alphabet, std::mt19937_64& rng, double density) {
    std::vector<std::string> names;
    for (int s = 0; s < states; ++s) names.push_back("q" + std::to_string(s));
    std::bernoulli_distribution present(density), coin(0.5);
    std::uniform_int_distribution<int> target(0, states - 1);
    std::vector<int> accepting;
    for (int s = 0; s < states; ++s)
        if (coin(rng)) accepting.push_back(s);

    TwoWayDFA a(names, alphabet, 0, accepting);
    const std::string symbols = std::string(1, kLeftEnd) + alphabet + std::string(1, kRightEnd);
    for (int s = 0; s < states; ++s)
        for (char c : symbols) {
            if (!present(rng)) continue;
            Move move = coin(rng) ? Move::Right : Move::Left;
            if (c == kLeftEnd) move = Move::Right;
            if (c == kRightEnd) move = Move::Left;
            a.set_transition(s, c, target(rng), move);
        }
    return a;
}

}  // namespace permrank::twoway
