// Command-line front end: sequences, series reversion, kernels, automata,
// language complexity, relation search, and the check suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autoseq/catalog.hpp"
#include "autoseq/checks.hpp"
#include "autoseq/io.hpp"

namespace {

using namespace autoseq;
using io::Json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

// Raised for bad names, unreadable files and malformed input; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";

    std::string seq_name;
    std::size_t seq_count = 0;
    std::int64_t seq_offset = 0;

    std::string invert_path;

    std::string kernel_name;
    unsigned kernel_k = 2;
    unsigned kernel_depth = 10;
    std::size_t kernel_horizon = 512;

    std::string dfao_name;
    bool dfao_dot = false;
    bool dfao_builtin = false;

    std::string language;
    std::size_t max_length = 0;

    std::string ore_name;
    std::uint32_t ore_p = 2;
    unsigned ore_depth = 2;
    unsigned ore_degree = 3;
    std::size_t ore_precision = 0;

    std::vector<std::string> check_ids;
    std::vector<std::string> check_horizons;
    std::string check_horizon_env;
    unsigned check_jobs = 1;
};

bool json_output(const Options& o) { return o.format == "json"; }

void require_sequence(const std::string& name) {
    if (!catalog::is_known(name)) throw UsageError("unknown sequence \"" + name + "\"");
}

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_seq(const Options& o) {
    require_sequence(o.seq_name);
    if (json_output(o)) {
        std::cout << Json{{"name", o.seq_name}, {"offset", o.seq_offset},
                          {"values", catalog::prefix(o.seq_name, o.seq_count)}}
                         .dump()
                  << '\n';
    } else {
        std::cout << catalog::bfile(o.seq_name, o.seq_count, o.seq_offset);
    }
    return exit_ok;
}

int cmd_invert(const Options& o) {
    TruncatedSeries s = TruncatedSeries::zero(2, 1);
    try {
        s = io::series_from_json(Json::parse(read_input(o.invert_path)));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed series JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed series JSON: ") + e.what());
    }
    const TruncatedSeries v = reversion(s);
    if (json_output(o)) {
        std::cout << io::series_to_json(v).dump() << '\n';
    } else {
        for (std::size_t i = 0; i < v.precision(); ++i) std::cout << (i ? " " : "") << v[i];
        std::cout << '\n';
    }
    return exit_ok;
}

SequencePrefix source(const std::string& name) {
    return [name](std::size_t n) { return catalog::prefix(name, n); };
}

int cmd_kernel(const Options& o) {
    require_sequence(o.kernel_name);
    const Kernel k = compute_kernel(source(o.kernel_name), o.kernel_k, o.kernel_depth, o.kernel_horizon);
    const RankProfile prof = rank_profile(source(o.kernel_name), o.kernel_k, o.kernel_depth, o.kernel_horizon);
    const Json report = io::kernel_report(o.kernel_name, k, prof);
    if (json_output(o)) {
        std::cout << report.dump() << '\n';
        return exit_ok;
    }
    std::cout << o.kernel_name << ": " << kernel_status(k) << ", " << k.classes.size() << " classes (k=" << k.k
              << ", H=" << k.horizon << ")\n";
    for (const RankRow& r : prof.rows)
        std::cout << "depth " << r.depth << ": " << r.distinct << " classes, rank " << r.rank << '\n';
    return exit_ok;
}

std::optional<Dfao> builtin_automaton(const std::string& name) {
    if (name == "d") return catalog::period_doubling_dfao();
    if (name == "u") return catalog::inverse_period_doubling_dfao();
    if (name == "x") return catalog::fibonacci_indicator_dfao();
    return std::nullopt;
}

std::optional<Dfa> builtin_language(const std::string& name) {
    if (name == "LF") return catalog::fibonacci_language_dfa();
    if (name == "Lprime") return catalog::language_l_prime();
    if (name == "La") return catalog::language_la();
    if (name == "La1") return catalog::language_la1();
    if (name == "La2") return catalog::language_la2();
    return std::nullopt;
}

int cmd_dfao(const Options& o) {
    std::optional<Dfao> m;
    if (o.dfao_builtin) {
        if (auto l = builtin_language(o.dfao_name))
            m = l->machine();
        else
            m = builtin_automaton(o.dfao_name);
        if (!m) throw UsageError("no built-in automaton named \"" + o.dfao_name + "\"");
    } else {
        require_sequence(o.dfao_name);
        const Kernel k = compute_kernel(source(o.dfao_name), o.kernel_k, o.kernel_depth, o.kernel_horizon);
        if (!k.closed) {
            std::cerr << o.dfao_name << ": kernel " << kernel_status(k) << ", no automaton\n";
            return exit_failure;
        }
        m = minimize(synthesize_dfao(k));
    }
    if (o.dfao_dot)
        std::cout << to_dot(*m, o.dfao_name);
    else if (json_output(o))
        std::cout << io::dfao_to_json(*m).dump() << '\n';
    else
        for (State q = 0; q < m->size(); ++q) {
            std::cout << m->state_name(q) << " / " << m->output(q) << ':';
            for (unsigned c = 0; c < m->alphabet_size(); ++c) std::cout << ' ' << c << "->" << m->state_name(m->next(q, c));
            std::cout << (q == m->initial() ? "  (initial)" : "") << '\n';
        }
    return exit_ok;
}

int cmd_complexity(const Options& o) {
    const auto l = builtin_language(o.language);
    if (!l) throw UsageError("unknown language \"" + o.language + "\" (LF, Lprime, La, La1, La2)");
    const auto counts = count_lengths(*l, o.max_length);
    if (json_output(o)) {
        Json values = Json::array();
        for (const auto& c : counts) values.push_back(c.str());
        std::cout << Json{{"language", o.language}, {"counts", values}}.dump() << '\n';
    } else {
        for (std::size_t n = 0; n < counts.size(); ++n) std::cout << n << ' ' << counts[n] << '\n';
    }
    return exit_ok;
}

int cmd_ore(const Options& o) {
    require_sequence(o.ore_name);
    if (!is_supported_prime(o.ore_p)) throw UsageError("--p must be prime");
    const std::size_t unknowns = static_cast<std::size_t>(o.ore_depth + 2) * (o.ore_degree + 1);
    const std::size_t precision = o.ore_precision ? o.ore_precision : std::max<std::size_t>(512, 4 * unknowns);
    const auto prefix = catalog::prefix(o.ore_name, precision);
    const auto s = TruncatedSeries::from_integers(o.ore_p, prefix);
    const auto r = power_relation_search(s, o.ore_depth, o.ore_degree);
    if (json_output(o)) {
        std::cout << (r ? io::relation_to_json(r->normalized(), o.ore_name) : Json(nullptr)).dump() << '\n';
    } else {
        std::cout << (r ? r->normalized().to_string(o.ore_name) : "no relation found") << '\n';
    }
    return r ? exit_ok : exit_failure;
}

std::map<std::string, std::size_t> parse_horizons(const std::vector<std::string>& items) {
    std::map<std::string, std::size_t> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("horizon override must look like id=N, got \"" + item + "\"");
        const std::string id = item.substr(0, eq);
        if (!is_check_id(id)) throw UsageError("unknown check id \"" + id + "\"");
        try {
            std::size_t used = 0;
            const auto v = std::stoull(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing text");
            out[id] = v;
        } catch (const std::logic_error&) {
            throw UsageError("horizon for \"" + id + "\" is not a number");
        }
    }
    return out;
}

int cmd_check(const Options& o) {
    for (const auto& id : o.check_ids)
        if (id != "all" && !is_check_id(id)) throw UsageError("unknown check id \"" + id + "\"");
    // flags win over the environment for the same id
    std::vector<std::string> items;
    std::stringstream env(o.check_horizon_env);
    for (std::string item; std::getline(env, item, ',');)
        if (!item.empty()) items.push_back(item);
    items.insert(items.end(), o.check_horizons.begin(), o.check_horizons.end());
    const auto results = run_checks(o.check_ids, parse_horizons(items), o.check_jobs);

    bool ok = true;
    for (const auto& r : results) ok = ok && r.status != CheckStatus::fail;
    if (json_output(o)) {
        std::cout << io::check_report(results).dump() << '\n';
    } else {
        for (const auto& r : results) {
            std::cout << to_string(r.status) << ' ' << r.id << " (horizon " << r.horizon << "): " << r.detail << '\n';
            if (r.mismatch) std::cout << "  mismatch: " << *r.mismatch << '\n';
        }
    }
    return ok ? exit_ok : exit_failure;
}

int cmd_list(const Options& o) {
    if (json_output(o)) {
        Json seqs = Json::array(), checks = Json::array();
        for (const auto& s : catalog::sequences()) seqs.push_back({{"name", s.name}, {"description", s.description}});
        for (const auto& c : check_catalog())
            checks.push_back({{"id", c.id}, {"title", c.title}, {"default_horizon", c.default_horizon}});
        std::cout << Json{{"sequences", seqs}, {"checks", checks}}.dump() << '\n';
        return exit_ok;
    }
    std::cout << "sequences (plus tp<prime>):\n";
    for (const auto& s : catalog::sequences()) std::cout << "  " << s.name << "  " << s.description << '\n';
    std::cout << "checks:\n";
    for (const auto& c : check_catalog()) std::cout << "  " << c.id << "  " << c.title << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"autoseq: automatic sequences, formal series and morphic words"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("AUTOSEQ_FORMAT");

    auto* seq = app.add_subcommand("seq", "Print the first N terms as an OEIS b-file");
    seq->add_option("name", o.seq_name, "Sequence name")->required();
    seq->add_option("N", o.seq_count, "Number of terms")->required();
    seq->add_option("--offset", o.seq_offset, "Index of the first term");

    auto* invert = app.add_subcommand("invert", "Compositional inverse of a series given as JSON (- for stdin)");
    invert->add_option("series", o.invert_path, "Path to {\"p\": ..., \"coeffs\": [...]}")->required();

    auto add_kernel_knobs = [&](CLI::App* sub) {
        sub->add_option("--k", o.kernel_k, "Kernel base")->envname("AUTOSEQ_KERNEL_K")->check(CLI::Range(2u, 16u));
        sub->add_option("--depth", o.kernel_depth, "Maximum depth")->envname("AUTOSEQ_KERNEL_DEPTH");
        sub->add_option("--horizon", o.kernel_horizon, "Fingerprint length H")
            ->envname("AUTOSEQ_KERNEL_HORIZON")
            ->check(CLI::PositiveNumber);
    };
    auto* kernel = app.add_subcommand("kernel", "k-kernel classes and rank profile");
    kernel->add_option("name", o.kernel_name, "Sequence name")->required();
    add_kernel_knobs(kernel);

    auto* dfao = app.add_subcommand("dfao", "DFAO synthesized from the kernel, or a built-in automaton");
    dfao->add_option("name", o.dfao_name, "Sequence name, or with --builtin: d u x LF Lprime La La1 La2")->required();
    dfao->add_flag("--dot", o.dfao_dot, "Emit Graphviz DOT");
    dfao->add_flag("--builtin", o.dfao_builtin, "Print the hand-coded automaton instead of synthesizing");
    add_kernel_knobs(dfao);

    auto* complexity = app.add_subcommand("complexity", "Number of words of each length 0..N in a language");
    complexity->add_option("language", o.language, "LF, Lprime, La, La1 or La2")->required();
    complexity->add_option("N", o.max_length, "Largest length")->required();

    auto* ore = app.add_subcommand("ore", "Search a relation c(X) + sum c_i(X) A(X^(p^i)) = 0");
    ore->add_option("name", o.ore_name, "Sequence name")->required();
    ore->add_option("--p", o.ore_p, "Characteristic")->envname("AUTOSEQ_ORE_P");
    ore->add_option("--depth", o.ore_depth, "Largest Frobenius exponent i")->envname("AUTOSEQ_ORE_DEPTH");
    ore->add_option("--deg", o.ore_degree, "Largest coefficient degree")->envname("AUTOSEQ_ORE_DEG");
    ore->add_option("--precision", o.ore_precision, "Number of series terms (default max(512, 4 * unknowns))");

    auto* check = app.add_subcommand("check", "Run the check suite (all checks by default)");
    check->add_option("ids", o.check_ids, "Check ids, or all");
    check->add_option("--horizon", o.check_horizons, "Override as id=N (0 skips the check); repeatable")
        ->allow_extra_args(false);
    check->add_option("--jobs", o.check_jobs, "Checks run concurrently")->envname("AUTOSEQ_CHECK_JOBS");
    if (const char* env = std::getenv("AUTOSEQ_HORIZONS")) o.check_horizon_env = env;

    auto* list = app.add_subcommand("list", "Sequence names and check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*seq) return cmd_seq(o);
        if (*invert) return cmd_invert(o);
        if (*kernel) return cmd_kernel(o);
        if (*dfao) return cmd_dfao(o);
        if (*complexity) return cmd_complexity(o);
        if (*ore) return cmd_ore(o);
        if (*check) return cmd_check(o);
        if (*list) return cmd_list(o);
    } catch (const UsageError& e) {
        std::cerr << "autoseq: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "autoseq: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "autoseq: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
