// Command-line front end: rank checks, verification suites, bound tables,
// characters and two-way automaton utilities.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "permrank/bounds.hpp"
#include "permrank/characters.hpp"
#include "permrank/permmatrix.hpp"
#include "permrank/twoway.hpp"
#include "permrank/verify.hpp"

namespace {

using nlohmann::json;
using namespace permrank;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int thread_count() {
    int n = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("PERMRANK_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return n;
}

struct RankArgs {
    int k = 0;
    std::string method = "auto";
    int primes = 3;
    std::uint64_t seed = 0x5eed;
    std::string dump;
    bool json = false;
    bool allow_n8 = false;
};

int cmd_rank(const RankArgs& args) {
    if (args.k < 1 || args.k > kMaxMatrixDegree) {
        std::cerr << "rank: --k must be in [1, " << kMaxMatrixDegree << "]\n";
        return kExitUsage;
    }
    RankConfig config;
    config.method = parse_rank_method(args.method);
    config.num_primes = args.primes;
    config.seed = args.seed;
    config.threads = thread_count();
    config.allow_degree8 = args.allow_n8;

    if (!args.dump.empty()) dump_pbm(build_p(args.k), args.dump);

    const auto start = std::chrono::steady_clock::now();
    RankCertificate cert;
    try {
        cert = rank_certified(args.k, config);
    } catch (const PrimeDisagreement& e) {
        std::cerr << "rank: " << e.what() << '\n';
        return kExitMismatch;
    }
    const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const mpz_class expected = binomial(2 * args.k - 2, args.k - 1);
    const bool pass = mpz_class(static_cast<unsigned long>(cert.rank)) == expected;

    if (args.json) {
        auto primes = json::array();
        auto trials = json::array();
        for (const auto& t : cert.trials) {
            primes.push_back(t.prime);
            trials.push_back({{"prime", t.prime}, {"rank", t.rank}});
        }
        json out = {{"k", args.k},
                    {"rank", cert.rank},
                    {"expected", expected.get_ui()},
                    {"method", cert.method},
                    {"primes", primes},
                    {"trials", trials},
                    {"note", cert.note},
                    {"pass", pass},
                    {"elapsed_ms", elapsed}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "k=" << args.k << " rank=" << cert.rank << " expected=" << expected << " method=" << cert.method;
        for (const auto& t : cert.trials) std::cout << " p" << t.prime << "=" << t.rank;
        std::cout << " (" << static_cast<long long>(elapsed) << " ms) " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : kExitMismatch;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, bool as_json) {
    const auto reports = run_suite(suite, options);
    bool ok = true;
    auto arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (as_json)
            arr.push_back(to_json(r));
        else
            std::cout << format_plain(r);
    }
    if (as_json) std::cout << arr.dump(2) << '\n';
    return ok ? 0 : kExitMismatch;
}

int cmd_asym(int n, int digits, bool as_json) {
    const AsymptoticRatio r = asymptotic_ratio(n, digits);
    if (as_json)
        std::cout << json{{"n", r.n}, {"digits", r.digits}, {"ratio", r.decimal}, {"deviation", r.deviation}}.dump(2)
                  << '\n';
    else
        std::cout << "r(" << r.n << ") = " << r.decimal << "  |r-1| = " << r.deviation << '\n';
    return 0;
}

int cmd_chartable(int n, const std::string& format) {
    const CharacterTable t = character_table(n);
    if (format == "json") {
        json out = {{"n", n}, {"irreducibles", t.irreducibles}, {"classes", t.classes}};
        auto rows = json::array();
        for (const auto& row : t.values) {
            auto r = json::array();
            for (const auto& v : row) r.push_back(v.get_si());
            rows.push_back(r);
        }
        out["values"] = rows;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    const char sep = format == "csv" ? ',' : '\t';
    auto label = [&](const Partition& p) { return format == "csv" ? "\"" + to_string(p) + "\"" : to_string(p); };
    std::cout << (format == "csv" ? "\"lambda\\mu\"" : "lambda\\mu");
    for (const auto& mu : t.classes) std::cout << sep << label(mu);
    std::cout << '\n';
    for (std::size_t r = 0; r < t.irreducibles.size(); ++r) {
        std::cout << label(t.irreducibles[r]);
        for (const auto& v : t.values[r]) std::cout << sep << v;
        std::cout << '\n';
    }
    return 0;
}

twoway::TwoWayDFA load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return twoway::TwoWayDFA::from_json(json::parse(in));
}

int cmd_2dfa_run(const std::string& path, const std::string& word, bool trace, bool as_json) {
    const auto a = load_automaton(path);
    const auto result = twoway::run(a, word, trace);
    if (as_json) {
        json out = {{"word", word}, {"outcome", twoway::to_string(result.outcome)}, {"steps", result.steps}};
        if (trace) {
            auto t = json::array();
            for (const auto& c : result.trace)
                t.push_back({{"state", a.state_names()[static_cast<std::size_t>(c.state)]}, {"position", c.position}});
            out["trace"] = t;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        if (trace)
            for (const auto& c : result.trace)
                std::cout << "  " << a.state_names()[static_cast<std::size_t>(c.state)] << " @" << c.position << '\n';
        std::cout << twoway::to_string(result.outcome) << '\n';
    }
    return 0;
}

int cmd_2dfa_commrank(const std::string& path, int prefix_len, int suffix_len, bool as_json) {
    const auto a = load_automaton(path);
    const auto prefixes = twoway::words_up_to(a.alphabet(), prefix_len);
    const auto suffixes = twoway::words_up_to(a.alphabet(), suffix_len);
    const auto m = twoway::comm_matrix(a, prefixes, suffixes, true);
    const std::size_t rank = rank_exact(m.entries);

    json out = {{"prefixes", prefixes.size()},
                {"suffixes", suffixes.size()},
                {"distinct_rows", m.entries.rows()},
                {"distinct_cols", m.entries.cols()},
                {"schmidt_lower_bound", rank}};
    if (a.num_states() <= twoway::kMaxConvertibleStates) {
        const auto conv = twoway::to_dfa(a);
        out["dfa_states"] = conv.dfa.num_states();
        out["minimal_dfa_states"] = twoway::minimize(conv.dfa).num_states();
        out["dfa_bound"] = dfa_bound(a.num_states()).get_str();
    }
    if (as_json) {
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : out.items()) std::cout << key << ": " << value << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank checks for cyclic-product permutation matrices and related bounds"};
    app.require_subcommand(1);

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "Rank of P^(k) compared with C(2k-2, k-1)");
    rank->add_option("--k", rank_args.k, "Permutation degree")->required();
    rank->add_option("--method", rank_args.method, "auto, exact or modp")->check(CLI::IsMember({"auto", "exact", "modp"}));
    rank->add_option("--primes", rank_args.primes, "Number of random primes for modp")->check(CLI::PositiveNumber);
    rank->add_option("--seed", rank_args.seed, "Seed for prime selection");
    rank->add_option("--dump-pbm", rank_args.dump, "Write P^(k) as a PBM bitmap");
    rank->add_flag("--json", rank_args.json, "JSON output");
    rank->add_flag("--allow-n8", rank_args.allow_n8, "Permit k = 8 (order 40320)");

    std::string suite;
    VerifyOptions verify_options;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--n", verify_options.n_limit, "Size limit override");
    verify->add_flag("--quick", verify_options.quick, "Cap sizes at n = 6");
    verify->add_option("--seed", verify_options.seed, "Seed for randomized suites");
    verify->add_flag("--json", verify_json, "JSON output");

    int bound_max = 10;
    std::string bound_format = "plain";
    auto* bound = app.add_subcommand("bound", "Table of state-complexity bounds");
    bound->add_option("--max", bound_max, "Largest n")->check(CLI::PositiveNumber);
    bound->add_option("--format", bound_format, "csv, json, markdown or plain")
        ->check(CLI::IsMember({"csv", "json", "markdown", "plain"}));

    int asym_n = 400, asym_digits = 30;
    bool asym_json = false;
    auto* asym = app.add_subcommand("asym", "Ratio of the new bound to its asymptotic form");
    asym->add_option("--n", asym_n, "n")->check(CLI::PositiveNumber);
    asym->add_option("--digits", asym_digits, "Significant digits")->check(CLI::Range(1, kMaxRatioDigits));
    asym->add_flag("--json", asym_json, "JSON output");

    std::string lambda_text, alpha_text;
    auto* chr = app.add_subcommand("char", "Irreducible character value chi_lambda(alpha)");
    chr->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
    chr->add_option("--alpha", alpha_text, "Cycle type, e.g. 3")->required();

    int table_n = 0;
    std::string table_format = "plain";
    auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
    chartable->add_option("n", table_n, "n")->required()->check(CLI::Range(1, kMaxCharacterTableDegree));
    chartable->add_option("--format", table_format, "csv, json or plain")->check(CLI::IsMember({"csv", "json", "plain"}));

    auto* dfa = app.add_subcommand("2dfa", "Two-way automaton utilities");
    dfa->require_subcommand(1);
    std::string automaton_path, word;
    bool run_trace = false, run_json = false;
    auto* dfa_run = dfa->add_subcommand("run", "Simulate on a word");
    dfa_run->add_option("-a,--automaton", automaton_path, "Automaton JSON file")->required()->check(CLI::ExistingFile);
    dfa_run->add_option("-w,--word", word, "Input word");
    dfa_run->add_flag("--trace", run_trace, "Print configurations");
    dfa_run->add_flag("--json", run_json, "JSON output");
    int prefix_len = 4, suffix_len = 4;
    bool comm_json = false;
    auto* commrank = dfa->add_subcommand("commrank", "Schmidt bound from a sampled communication matrix");
    commrank->add_option("-a,--automaton", automaton_path, "Automaton JSON file")->required()->check(CLI::ExistingFile);
    commrank->add_option("--prefix-len", prefix_len, "Longest prefix")->check(CLI::NonNegativeNumber);
    commrank->add_option("--suffix-len", suffix_len, "Longest suffix")->check(CLI::NonNegativeNumber);
    commrank->add_flag("--json", comm_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*rank) return cmd_rank(rank_args);
        if (*verify) {
            verify_options.threads = thread_count();
            return cmd_verify(suite, verify_options, verify_json);
        }
        if (*bound) {
            std::cout << format_table(table(bound_max), parse_table_format(bound_format));
            return 0;
        }
        if (*asym) return cmd_asym(asym_n, asym_digits, asym_json);
        if (*chr) {
            std::cout << mn_character(Partition::parse(lambda_text), Partition::parse(alpha_text)) << '\n';
            return 0;
        }
        if (*chartable) return cmd_chartable(table_n, table_format);
        if (*dfa_run) return cmd_2dfa_run(automaton_path, word, run_trace, run_json);
        if (*commrank) return cmd_2dfa_commrank(automaton_path, prefix_len, suffix_len, comm_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
