#include "permrank/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "permrank/bounds.hpp"
#include "permrank/characters.hpp"
#include "permrank/fixtures.hpp"
#include "permrank/group_algebra.hpp"
#include "permrank/permmatrix.hpp"
#include "permrank/twoway.hpp"
#include "permrank/young.hpp"

namespace permrank {

namespace {

constexpr int kQuickLimit = 6;
const std::vector<int> kRatioPoints = {10, 50, 100, 200, 400};
// |r(400) - 1| observed at 0.0024926 when the ratio was first evaluated.
constexpr double kRatioCap400 = 0.003;

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    template <typename A, typename B>
    void equal(const std::string& inputs, const A& expected, const B& actual, const std::string& claim) {
        ++report_.cases;
        if (!(expected == actual)) report_.failures.push_back({inputs, str(expected), str(actual), claim});
    }

    void holds(const std::string& inputs, bool ok, const std::string& claim) {
        equal(inputs, true, ok, claim);
    }

private:
    template <typename T>
    static std::string str(const T& v) {
        std::ostringstream out;
        if constexpr (std::is_same_v<T, bool>)
            out << (v ? "true" : "false");
        else
            out << v;
        return out.str();
    }

    VerifyReport& report_;
};

int limit(const VerifyOptions& o, int fallback) {
    int l = o.n_limit > 0 ? o.n_limit : fallback;
    return o.quick ? std::min(l, kQuickLimit) : l;
}

mpz_class factorial_mpz(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void suite_centrality(const VerifyOptions& o, Checker& check) {
    const int top = std::min(limit(o, 6), 7);
    for (int n = 1; n <= top; ++n)
        check.holds("q_n n=" + std::to_string(n), is_central(q_n(n), o.threads), "q_n commutes with every permutation");
    for (int n = 1; n <= std::min(top, 5); ++n)
        for (const Partition& mu : partitions_of(n))
            check.holds("class_sum " + to_string(mu), is_central(class_sum(mu), o.threads), "class sums are central");
    check.equal("basis (1 2) n=3", false, is_central(GroupAlgebraElement::basis(Permutation::from_images({2, 1, 3}))),
                "a transposition is not central in S_3");
}

void suite_operator(const VerifyOptions& o, Checker& check) {
    const int top = std::min(limit(o, 5), kMaxOperatorDegree);
    for (int n = 1; n <= top; ++n) {
        const BinaryMatrix op = operator_matrix(n);
        check.holds("n=" + std::to_string(n), op == build_q(n), "matrix of x -> q_n x equals Q^(n)");
        bool sums_ok = true;
        for (std::size_t c = 0; c < op.cols(); ++c) sums_ok = sums_ok && op.col_sum(c) == factorial(n - 1);
        check.holds("column sums n=" + std::to_string(n), sums_ok, "every column of the operator matrix sums to (n-1)!");
    }
}

void suite_characters(const VerifyOptions& o, Checker& check) {
    const int top = std::min(limit(o, 8), kMaxCharacterTableDegree);
    for (int n : {3, 4}) {
        const CharacterTable ref = fixtures::character_table_reference(n);
        const CharacterTable got = character_table(n);
        for (std::size_t r = 0; r < ref.irreducibles.size(); ++r)
            for (std::size_t c = 0; c < ref.classes.size(); ++c)
                check.equal("chi" + to_string(ref.irreducibles[r]) + "(" + to_string(ref.classes[c]) + ")",
                            ref.values[r][c], mn_character(ref.irreducibles[r], ref.classes[c]),
                            "reference character table of S_" + std::to_string(n));
        check.holds("table layout n=" + std::to_string(n),
                    got.irreducibles == ref.irreducibles && got.classes == ref.classes, "partition order of tables");
    }
    for (int n = 1; n <= top; ++n) {
        const CharacterTable t = character_table(n);
        std::vector<mpz_class> sizes;
        for (const Partition& mu : t.classes) sizes.push_back(class_size(mu));
        const mpz_class order = factorial_mpz(n);
        for (std::size_t a = 0; a < t.irreducibles.size(); ++a) {
            for (std::size_t b = a; b < t.irreducibles.size(); ++b) {
                mpz_class inner = 0;
                for (std::size_t c = 0; c < t.classes.size(); ++c) inner += sizes[c] * t.values[a][c] * t.values[b][c];
                check.equal("<" + to_string(t.irreducibles[a]) + "," + to_string(t.irreducibles[b]) + ">",
                            a == b ? order : mpz_class(0), inner, "row orthogonality of irreducible characters");
            }
            check.equal("dim " + to_string(t.irreducibles[a]), specht_dim(t.irreducibles[a]),
                        t.values[a][t.classes.size() - 1], "character at the identity is the dimension");
        }
        mpz_class total = 0;
        for (const auto& s : sizes) total += s;
        check.equal("class sizes n=" + std::to_string(n), order, total, "conjugacy classes partition S_n");
    }
}

void suite_hooks(const VerifyOptions& o, Checker& check) {
    const int top = std::min(limit(o, 10), kMaxCharacterTableDegree);
    for (int n = 1; n <= top; ++n) {
        CharacterEvaluator eval;
        const Partition ncycle{n};
        for (const Partition& lambda : partitions_of(n)) {
            const mpz_class value = eval(lambda, ncycle);
            const std::string in = to_string(lambda);
            check.equal(in, character_at_ncycle(lambda), value, "closed form at the n-cycle matches the rim-hook sum");
            check.equal(in + " nonzero", is_hook(lambda), value != 0, "nonzero at the n-cycle exactly on hooks");
            if (is_hook(lambda))
                check.equal(in + " sign", mpz_class((lambda.length() - 1) % 2 == 0 ? 1 : -1), value,
                            "value on a hook is (-1)^(rows-1)");
        }
    }
}

void suite_dims(const VerifyOptions& o, Checker& check) {
    const int top = limit(o, 10);
    for (int n = 1; n <= top; ++n) {
        mpz_class squares = 0;
        for (const Partition& lambda : partitions_of(n)) squares += syt_count(lambda) * syt_count(lambda);
        check.equal("sum dim^2 n=" + std::to_string(n), factorial_mpz(n), squares, "sum of squared dimensions is n!");
    }
    for (int n = 1; n <= std::min(top, 8); ++n)
        for (const Partition& lambda : partitions_of(n))
            check.equal("syt " + to_string(lambda), syt_count(lambda), mpz_class(enumerate_syt(lambda).size()),
                        "hook-length count equals enumerated tableaux");
    for (int n = 1; n <= 64; ++n) {
        mpz_class sum = 0;
        for (int k = 1; k <= n; ++k) sum += binomial(n - 1, k - 1) * binomial(n - 1, k - 1);
        check.equal("hook identity n=" + std::to_string(n), binomial(2 * n - 2, n - 1), sum,
                    "sum_k C(n-1,k-1)^2 = C(2n-2,n-1)");
    }
}

void suite_table1(const VerifyOptions&, Checker& check) {
    for (const BoundRow& ref : fixtures::table1_reference()) {
        const std::string n = "n=" + std::to_string(ref.n);
        check.equal(n + " earlier", ref.earlier_lower, bound_earlier(ref.n), "earlier lower bound column");
        check.equal(n + " new", ref.new_lower, bound_new(ref.n), "new lower bound column");
        check.equal(n + " upper", ref.upper, bound_upper(ref.n), "upper bound column");
    }
}

void suite_asym(const VerifyOptions&, Checker& check) {
    double previous = 0.0;
    bool first = true;
    for (int n : kRatioPoints) {
        const AsymptoticRatio r = asymptotic_ratio(n, 30);
        const std::string in = "r(" + std::to_string(n) + ")";
        check.holds(in + " finite positive", r.value > 0.0 && r.value < 2.0, "ratio is finite and positive");
        int significant = 0;
        bool leading = true;
        for (char c : r.decimal) {
            if (c < '0' || c > '9') continue;
            if (leading && c == '0') continue;
            leading = false;
            ++significant;
        }
        check.holds(in + " digits", significant >= 30, "ratio carries at least 30 significant digits");
        if (!first) check.holds(in + " decreasing", r.deviation < previous, "|r(n) - 1| strictly decreases");
        previous = r.deviation;
        first = false;
    }
    check.holds("r(400) cap", asymptotic_ratio(400, 30).deviation < kRatioCap400, "|r(400) - 1| below the pinned cap");
}

void suite_automata(const VerifyOptions& o, Checker& check) {
    using namespace twoway;
    std::mt19937_64 rng(o.seed);
    const std::vector<std::string> words = words_up_to("ab", 6);
    const std::vector<std::string> samples = words_up_to("ab", 3);
    for (int i = 0; i < 100; ++i) {
        const int states = 1 + i % 3;
        const TwoWayDFA a = random_automaton(states, "ab", rng);
        const std::string in = "automaton #" + std::to_string(i) + " (" + std::to_string(states) + " states)";
        const Conversion conv = to_dfa(a);
        bool agree = true;
        for (const auto& w : words) agree = agree && conv.dfa.accepts(w) == accepts(a, w);
        check.holds(in + " agreement", agree, "one-way DFA agrees with direct simulation up to length 6");
        check.holds(in + " state count", mpz_class(conv.dfa.num_states()) <= behavior_space_size(states),
                    "reachable behaviors <= n(n+2)^n + 2");
        const auto minimal = minimize(conv.dfa);
        check.holds(in + " schmidt", schmidt_lower_bound(a, samples, samples) <= static_cast<std::size_t>(minimal.num_states()),
                    "communication rank <= minimal DFA size");
    }
}

void suite_rank(const VerifyOptions& o, Checker& check) {
    const int top = std::min(limit(o, 7), kMaxMatrixDegree);
    RankConfig config;
    config.seed = o.seed;
    config.threads = o.threads;
    config.allow_degree8 = o.n_limit >= 8;
    std::vector<mpz_class> ranks;
    for (int k = 1; k <= top; ++k) {
        const RankCertificate cert = rank_certified(k, config);
        ranks.emplace_back(static_cast<unsigned long>(cert.rank));
        const std::string in = "k=" + std::to_string(k) + " (" + cert.method + ")";
        check.equal(in, binomial(2 * k - 2, k - 1), ranks.back(), "rank P^(k) = C(2k-2,k-1)");
        mpz_class hooks = 0;
        for (const Partition& lambda : partitions_of(k))
            if (is_hook(lambda)) hooks += specht_dim(lambda) * specht_dim(lambda);
        check.equal(in + " hooks", hooks, ranks.back(), "rank equals the sum of squared hook dimensions");
        check.equal("bound n=" + std::to_string(k), bound_new(k), bound_from_ranks(k, ranks),
                    "communication rank from block ranks matches the closed form");
    }
}

using SuiteFn = std::function<void(const VerifyOptions&, Checker&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"centrality", suite_centrality}, {"operator", suite_operator}, {"characters", suite_characters},
        {"hooks", suite_hooks},           {"dims", suite_dims},         {"table1", suite_table1},
        {"asym", suite_asym},             {"automata", suite_automata}, {"rank", suite_rank},
    };
    return suites;
}

VerifyReport run_one(const std::string& name, const SuiteFn& fn, const VerifyOptions& o) {
    VerifyReport report;
    report.suite = name;
    Checker check(report);
    const auto start = std::chrono::steady_clock::now();
    fn(o, check);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::sort(report.failures.begin(), report.failures.end(),
              [](const VerifyFailure& a, const VerifyFailure& b) { return a.inputs < b.inputs; });
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& options) {
    std::vector<VerifyReport> reports;
    for (const auto& [suite, fn] : registry())
        if (name == "all" || name == suite) reports.push_back(run_one(suite, fn, options));
    if (reports.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
    return reports;
}

nlohmann::json to_json(const VerifyReport& report) {
    auto failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}, {"claim", f.claim}});
    return {{"suite", report.suite},
            {"cases", report.cases},
            {"failures", failures},
            {"passed", report.passed()},
            {"elapsed_ms", report.elapsed_ms}};
}

std::string format_plain(const VerifyReport& report) {
    std::ostringstream out;
    out << (report.passed() ? "PASS " : "FAIL ") << report.suite << ": " << report.cases << " cases, "
        << report.failures.size() << " failures (" << static_cast<long long>(report.elapsed_ms) << " ms)\n";
    for (const auto& f : report.failures)
        out << "  " << f.inputs << ": expected " << f.expected << ", got " << f.actual << "  [" << f.claim << "]\n";
    return out.str();
}

}  // namespace permrank
