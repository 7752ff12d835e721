#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include "permrank/bounds.hpp"
#include "permrank/twoway.hpp"

using namespace permrank;
using namespace permrank::twoway;

namespace {

TwoWayDFA load(const std::string& name) {
    std::ifstream in(std::string(PERMRANK_DATA_DIR) + "/automata/" + name);
    REQUIRE(in);
    return TwoWayDFA::from_json(nlohmann::json::parse(in));
}

// Reference simulator: a loop is a repeated configuration.
Outcome simulate(const TwoWayDFA& a, const std::string& w) {
    const std::string tape = std::string(1, kLeftEnd) + w + kRightEnd;
    std::set<std::pair<int, int>> seen;
    int state = a.initial(), pos = 0;
    while (true) {
        if (!seen.insert({state, pos}).second) return Outcome::Loop;
        const auto& t = a.transition(state, tape[static_cast<std::size_t>(pos)]);
        if (!t) return a.is_accepting(state) ? Outcome::Accept : Outcome::Reject;
        state = t->to;
        pos += t->move == Move::Right ? 1 : -1;
    }
}

std::vector<TwoWayDFA> random_family(int count, std::uint64_t seed, int max_states = 3) {
    std::mt19937_64 rng(seed);
    std::vector<TwoWayDFA> out;
    for (int i = 0; i < count; ++i) out.push_back(random_automaton(1 + i % max_states, "ab", rng));
    return out;
}

}  // namespace

TEST_CASE("example automata") {
    const auto last_a = load("last_a.json");
    CHECK(run(last_a, "aba").outcome == Outcome::Accept);
    CHECK(run(last_a, "ab").outcome == Outcome::Reject);
    CHECK(run(last_a, "").outcome == Outcome::Reject);
    CHECK(run(last_a, "a").steps == 4);

    const auto traced = run(last_a, "a", true);
    REQUIRE(traced.trace.size() == 5);
    CHECK(traced.trace.front().position == 0);
    CHECK(traced.trace.back().position == 2);
    CHECK(last_a.state_names()[static_cast<std::size_t>(traced.trace.back().state)] == "done");

    const auto always = load("always_accept.json");
    for (const auto& w : words_up_to("ab", 4)) CHECK(accepts(always, w));

    const auto bounce = load("bounce_loop.json");
    CHECK(run(bounce, "a").outcome == Outcome::Loop);
    CHECK(run(bounce, "").outcome == Outcome::Reject);
    CHECK(run(bounce, "aa").outcome == Outcome::Reject);
    CHECK_THROWS_AS(run(bounce, "ab"), std::invalid_argument);
}

TEST_CASE("JSON schema errors") {
    auto j = load("last_a.json").to_json();
    CHECK(TwoWayDFA::from_json(j).to_json() == j);

    auto bad = j;
    bad["initial"] = "nowhere";
    CHECK_THROWS_AS(TwoWayDFA::from_json(bad), std::invalid_argument);
    bad = j;
    bad["alphabet"] = {"a", "<"};
    CHECK_THROWS_AS(TwoWayDFA::from_json(bad), std::invalid_argument);
    bad = j;
    bad["delta"].push_back({{"state", "scan"}, {"symbol", "a"}, {"to", "done"}, {"move", "R"}});
    CHECK_THROWS_AS(TwoWayDFA::from_json(bad), std::invalid_argument);
    bad = j;
    bad["delta"].push_back({{"state", "done"}, {"symbol", "<"}, {"to", "done"}, {"move", "L"}});
    CHECK_THROWS_AS(TwoWayDFA::from_json(bad), std::invalid_argument);
    bad = j;
    bad["delta"].push_back({{"state", "done"}, {"symbol", "a"}, {"to", "done"}, {"move", "X"}});
    CHECK_THROWS_AS(TwoWayDFA::from_json(bad), std::invalid_argument);
    bad = j;
    bad.erase("states");
    CHECK_THROWS_AS(TwoWayDFA::from_json(bad), std::invalid_argument);

    TwoWayDFA a({"q"}, "a", 0, {});
    CHECK_THROWS_AS(a.set_transition(0, '>', 0, Move::Right), std::invalid_argument);
    CHECK_THROWS_AS(a.set_transition(0, 'z', 0, Move::Right), std::invalid_argument);
    CHECK_THROWS_AS(TwoWayDFA({}, "a", 0, {}), std::invalid_argument);
}

TEST_CASE("run agrees with a configuration-set simulator") {
    for (const auto& a : random_family(60, 1))
        for (const auto& w : words_up_to("ab", 5)) CHECK(run(a, w).outcome == simulate(a, w));
}

TEST_CASE("behaviors compose and determine acceptance") {
    for (const auto& a : random_family(40, 2)) {
        for (const auto& u : words_up_to("ab", 4)) {
            const Behavior b = prefix_behavior(a, u);
            CHECK(accepts_from(a, b) == accepts(a, u));
            for (char c : std::string("ab")) CHECK(extend(a, b, c) == prefix_behavior(a, u + c));
        }
    }
}

TEST_CASE("equal behaviors give equal communication rows") {
    const auto words = words_up_to("ab", 4);
    for (const auto& a : random_family(30, 3)) {
        std::map<Behavior, std::string> first;
        for (const auto& u : words) {
            const auto [it, fresh] = first.emplace(prefix_behavior(a, u), u);
            if (fresh) continue;
            for (const auto& v : words) CHECK(accepts(a, it->second + v) == accepts(a, u + v));
        }
    }
}

TEST_CASE("conversion to a one-way DFA") {
    const auto last_a = load("last_a.json");
    const auto conv = to_dfa(last_a);
    CHECK(conv.behaviors.size() == static_cast<std::size_t>(conv.dfa.num_states()));
    CHECK(minimize(conv.dfa).num_states() == 2);
    CHECK(minimize(to_dfa(load("always_accept.json")).dfa).num_states() == 1);

    for (const auto& a : random_family(60, 4)) {
        const auto dfa = to_dfa(a).dfa;
        const auto small = minimize(dfa);
        CHECK(small.num_states() <= dfa.num_states());
        for (const auto& w : words_up_to("ab", 6)) {
            CHECK(dfa.accepts(w) == accepts(a, w));
            CHECK(small.accepts(w) == accepts(a, w));
        }
    }

    std::mt19937_64 rng(9);
    CHECK_THROWS_AS(to_dfa(random_automaton(kMaxConvertibleStates + 1, "ab", rng)), std::invalid_argument);
    CHECK_THROWS_AS(to_dfa(last_a, kMaxConvertibleStates, 1), std::length_error);
}

TEST_CASE("communication rank is at most the number of prefix behaviors") {
    const auto words = words_up_to("ab", 4);
    for (const auto& a : random_family(30, 7)) {
        std::set<Behavior> distinct;
        for (const auto& u : words) distinct.insert(prefix_behavior(a, u));
        CHECK(schmidt_lower_bound(a, words, words) <= distinct.size());
    }
}

TEST_CASE("state counts against the two ceilings") {
    CHECK(behavior_space_size(1) == 5);
    CHECK(behavior_space_size(3) == 377);
    CHECK_THROWS_AS(behavior_space_size(0), std::invalid_argument);
    for (int states = 1; states <= 3; ++states)
        for (const auto& a : random_family(30, 6, states))
            CHECK(mpz_class(to_dfa(a).dfa.num_states()) <= behavior_space_size(a.num_states()));

    // One state: halts accepting on 'a', bounces back to '<' and loops on 'b'.
    // Its language (words not starting with b) needs three DFA states, one
    // more than dfa_bound(1).
    const auto a = load("not_b_first.json");
    CHECK(accepts(a, ""));
    CHECK(accepts(a, "abb"));
    CHECK(run(a, "ba").outcome == Outcome::Loop);
    CHECK(minimize(to_dfa(a).dfa).num_states() == 3);
    CHECK(mpz_class(3) > dfa_bound(1));
}

TEST_CASE("words_up_to") {
    CHECK(words_up_to("ab", 2) == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
    CHECK(words_up_to("xyz", 0) == std::vector<std::string>{""});
    CHECK(words_up_to("ab", 5).size() == 63);
}

TEST_CASE("communication matrices and the Schmidt bound") {
    const auto last_a = load("last_a.json");
    const std::vector<std::string> pre{"", "a", "b"}, suf{"", "a", "b"};
    const auto m = comm_matrix(last_a, pre, suf);
    const std::vector<std::vector<int>> expected{{0, 1, 0}, {1, 1, 0}, {0, 1, 0}};
    CHECK(m.entries == BinaryMatrix::from_rows(expected));
    const auto d = comm_matrix(last_a, pre, suf, true);
    CHECK(d.row_labels == std::vector<std::string>{"", "a"});
    CHECK(d.col_labels == std::vector<std::string>{"", "a", "b"});
    CHECK(d.entries.rows() == 2);

    const auto words = words_up_to("ab", 4);
    CHECK(schmidt_lower_bound(last_a, words, words) == 2);
    CHECK(schmidt_lower_bound(load("always_accept.json"), words, words) == 1);
    CHECK(schmidt_lower_bound(load("bounce_loop.json"), words_up_to("a", 3), words_up_to("a", 3)) == 0);

    for (const auto& a : random_family(30, 5)) {
        const std::size_t small = schmidt_lower_bound(a, words_up_to("ab", 2), words_up_to("ab", 2));
        const std::size_t large = schmidt_lower_bound(a, words, words);
        CHECK(small <= large);
        CHECK(large <= static_cast<std::size_t>(minimize(to_dfa(a).dfa).num_states()));
    }
}
