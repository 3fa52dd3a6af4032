#include "qeuler/cli.hpp"

#include "qeuler/cache.hpp"
#include "qeuler/eulerian.hpp"
#include "qeuler/golden.hpp"
#include "qeuler/partitions.hpp"
#include "qeuler/permutation.hpp"
#include "qeuler/stabilization.hpp"
#include "qeuler/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <set>

namespace qeuler {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string env_or(const char* name, const std::string& fallback)
{
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

/// Table seeded from QEULER_CACHE when that file exists.
EulerianTable initial_table()
{
    const std::string path = env_or("QEULER_CACHE", "");
    if (!path.empty() && std::filesystem::exists(path))
        return cache_load(path);
    return {};
}

std::string join_pieces(const std::vector<Word>& pieces)
{
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i > 0)
            out += " | ";
        out += render_word(pieces[i]);
    }
    return out;
}

std::string join_sum(const std::vector<int>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += '+';
        out += std::to_string(values[i]);
    }
    return out;
}

int cmd_weight(const std::string& text, bool shortcut, std::ostream& out)
{
    const Permutation p = Permutation::parse(text);
    const Permutation canon = flatten(p.word());
    const int w = weight(canon, WeightOptions{shortcut, true});
    const int des = descents(canon);
    out << "permutation: " << p.to_string() << '\n';
    if (!p.is_canonical())
        out << "flattened: " << canon.to_string() << '\n';
    out << "length: " << canon.size() << '\n';
    out << "descents: " << des << '\n';
    out << "weight: " << w << '\n';
    if (!canon.empty()) {
        out << "maxwt: " << maxwt(canon.size(), des) << '\n';
        out << "disparity: " << maxwt(canon.size(), des) - w << '\n';
    }
    out << "split trace:\n";
    const auto trace = weight_trace(canon);
    if (trace.empty())
        out << "  (identity or length <= 1: weight 0)\n";
    for (const auto& step : trace) {
        out << std::string(2 * (step.depth + 1), ' ') << render_word(step.word) << " + " << step.word.size() + 1
            << " -> " << join_pieces(step.split.pieces) << "   des " << join_sum(step.piece_descents) << ", w "
            << join_sum(step.piece_weights) << " => " << step.weight << '\n';
    }
    return kExitOk;
}

void emit_poly(const BivariatePolynomial& p, const std::string& format, std::ostream& out)
{
    if (format == "text") {
        out << p.render() << '\n';
    } else if (format == "csv") {
        out << "d,m,coefficient\n";
        for (const auto& [key, c] : p.terms())
            out << key.first << ',' << key.second << ',' << c.str() << '\n';
    } else {
        out << p.to_lines();
    }
}

int cmd_en(int n, const std::string& method, const std::string& format, bool golden, unsigned jobs, std::ostream& out)
{
    if (n < 0)
        throw UsageError("--n must be nonnegative");
    BruteOptions brute{default_enumeration_ceiling(), jobs};
    EulerianTable table = initial_table();

    if (golden) {
        if (n > 10)
            throw UsageError("published data covers n <= 10");
        const auto recur = en_recur(n, table);
        std::optional<BivariatePolynomial> brute_poly;
        if (n <= brute.ceiling)
            brute_poly = en_brute(n, brute);
        const auto published = golden_en(n);

        std::set<BivariatePolynomial::Key> keys;
        for (const auto* p : {&recur, &published.value})
            for (const auto& [key, c] : p->terms())
                keys.insert(key);
        if (brute_poly)
            for (const auto& [key, c] : brute_poly->terms())
                keys.insert(key);

        out << "E_" << n << " three-way comparison: brute | recurrence | transcribed\n";
        out << "d m brute recurrence transcribed\n";
        std::size_t brute_mismatch = 0, published_mismatch = 0;
        for (const auto& [d, m] : keys) {
            const BigInt r = recur.coeff_xq(d, m);
            const BigInt t = published.value.coeff_xq(d, m);
            std::string b = "-";
            std::string flag;
            if (brute_poly) {
                const BigInt bv = brute_poly->coeff_xq(d, m);
                b = bv.str();
                if (bv != r) {
                    ++brute_mismatch;
                    flag += " BRUTE!=RECURRENCE";
                }
            }
            if (t != r) {
                ++published_mismatch;
                flag += " transcription differs";
            }
            out << d << ' ' << m << ' ' << b << ' ' << r.str() << ' ' << t.str() << flag << '\n';
        }
        for (const auto& note : published.notes)
            out << "transcription note: " << note.message << '\n';
        out << "summary: " << (brute_poly ? (brute_mismatch ? "brute/recurrence DISAGREE" : "brute/recurrence agree")
                                          : "brute skipped (above ceiling)")
            << "; " << published_mismatch << " transcription mismatches (informational)\n";
        return brute_mismatch ? kExitVerificationFailed : kExitOk;
    }

    if (method == "brute") {
        emit_poly(en_brute(n, brute), format, out);
        return kExitOk;
    }
    if (method == "recur") {
        emit_poly(en_recur(n, table), format, out);
        return kExitOk;
    }
    const auto b = en_brute(n, brute);
    const auto r = en_recur(n, table);
    emit_poly(r, format, out);
    const auto diffs = diff_terms(b, r);
    out << "diff (d m brute recurrence): " << (diffs.empty() ? "empty" : std::to_string(diffs.size()) + " terms") << '\n';
    for (const auto& t : diffs)
        out << t.d << ' ' << t.m << ' ' << t.expected.str() << ' ' << t.actual.str() << '\n';
    return diffs.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_wd(int d, int terms, std::ostream& out)
{
    if (d < 1)
        throw UsageError("--d must be at least 1");
    if (terms < 0)
        throw UsageError("--terms must be nonnegative");
    EulerianTable table = initial_table();
    const auto prefix = wd_prefix(d, terms, table);
    out << "W_" << d << "(t) = " << prefix.render() << " + ...\n";
    out << prefix.render_csv() << '\n';
    return kExitOk;
}

int cmd_tnk(int n, int k, int table_n, const std::string& format, std::ostream& out)
{
    if (table_n >= 0) {
        if (format == "csv")
            out << render_table_csv(table_n);
        else if (format == "bfile")
            out << render_bfile(table_n);
        else
            out << render_table_text(table_n);
        return kExitOk;
    }
    if (n < 0 || k < 0)
        throw UsageError("tnk needs nonnegative --n and --k, or --table N");
    out << count_T(n, k).str() << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    int max_n = -1;
    int max_k = -1;
    int max_d = -1;
    std::string format = "text";
    unsigned jobs = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    auto pick = [](int value, int fallback) { return value >= 0 ? value : fallback; };
    BruteOptions brute{default_enumeration_ceiling(), a.jobs};
    EulerianTable table = initial_table();

    VerificationReport report;
    const std::string& s = a.suite;
    if (s == "recurrence")
        report = verify_recurrence(pick(a.max_n, 9), table, brute);
    else if (s == "stabilization")
        report = verify_stabilization(pick(a.max_n, 10), table);
    else if (s == "shift")
        report = verify_shift(pick(a.max_n, 10), table);
    else if (s == "disparity")
        report = verify_disparity(pick(a.max_n, 8), a.jobs);
    else if (s == "bijection")
        report = verify_bijection(pick(a.max_n, 8));
    else if (s == "lemma45")
        report = verify_lemma45(pick(a.max_n, 8), brute);
    else if (s == "partitions")
        report = verify_partitions(pick(a.max_n, 12), pick(a.max_k, 5), pick(a.max_d, 20), 15);
    else if (s == "conjecture")
        report = verify_conjecture(pick(a.max_k, 3), pick(a.max_d, 10), table);
    else if (s == "golden")
        report = verify_golden(pick(a.max_n, 7), table, brute);
    else if (s == "coefficients")
        report = verify_coeff_recurrence(pick(a.max_n, 12), table);
    else if (s == "classical")
        report = verify_classical(pick(a.max_n, 15), 9, table);
    else if (s == "w-prefixes")
        report = verify_w_prefixes(table);
    else if (s == "w-t")
        report = verify_w_t(pick(a.max_d, 5), table);
    else if (s == "appendix")
        report = appendix_diff(pick(a.max_n, 10), table, brute);
    else if (s == "weight-shortcut")
        report = verify_weight_shortcut(pick(a.max_n, 8));
    else if (s == "boundary")
        report = verify_boundary_conventions(pick(a.max_n, 10), table);
    else
        throw UsageError("unknown suite '" + s + "'");

    if (a.format == "csv")
        out << report.render_csv();
    else
        out << report.render_text();
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_cache(const std::string& action, const std::string& path_arg, int max_n, std::ostream& out)
{
    const std::string path = path_arg.empty() ? env_or("QEULER_CACHE", "") : path_arg;
    if (path.empty())
        throw UsageError("cache needs --path or QEULER_CACHE");
    if (action == "save") {
        EulerianTable table;
        if (std::filesystem::exists(path))
            table = cache_load(path);
        en_recur(max_n, table);
        cache_save(path, table);
        out << "saved E_0..E_" << max_n << " (" << table.size() << " entries) to " << path << '\n';
        return kExitOk;
    }
    const EulerianTable table = cache_load(path);
    out << "loaded " << table.size() << " entries from " << path << '\n';
    for (const auto& [n, entry] : table.snapshot())
        out << "E_" << n << ": " << entry.poly->size() << " terms, mass " << entry.poly->mass().str() << '\n';
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"q-Eulerian polynomial and permutation weight toolkit", "qeuler"};
    app.require_subcommand(1);

    std::string perm_text;
    bool shortcut = false;
    auto* weight_cmd = app.add_subcommand("weight", "weight, descents and split trace of a permutation");
    weight_cmd->add_option("perm", perm_text, "permutation, e.g. 781659243 or 10,2,1,...")->required();
    weight_cmd->add_flag("--shortcut", shortcut, "use w(1.pi) = w(pi) + des(pi)");

    int en_n = -1;
    std::string method = "recur", format = "text";
    bool golden = false;
    unsigned jobs = 0;
    auto* en_cmd = app.add_subcommand("en", "print E_n(x,q)");
    en_cmd->add_option("--n", en_n, "size")->required();
    en_cmd->add_option("--method", method, "brute|recur|both")->check(CLI::IsMember({"brute", "recur", "both"}));
    en_cmd->add_option("--format", format, "text|csv|lines")->check(CLI::IsMember({"text", "csv", "lines"}));
    en_cmd->add_flag("--golden", golden, "three-way diff against the published polynomial");
    en_cmd->add_option("--jobs", jobs, "enumeration threads (0 = all cores)");

    int wd_d = 0, wd_terms = 5;
    auto* wd_cmd = app.add_subcommand("wd", "prefix of W_d(t)");
    wd_cmd->add_option("--d", wd_d, "series index")->required();
    wd_cmd->add_option("--terms", wd_terms, "highest power of t");

    int t_n = -1, t_k = -1, t_table = -1;
    std::string t_format = "text";
    auto* tnk_cmd = app.add_subcommand("tnk", "two-type partition numbers T(n,k)");
    auto* n_opt = tnk_cmd->add_option("--n", t_n, "total");
    auto* k_opt = tnk_cmd->add_option("--k", t_k, "primed parts");
    auto* table_opt = tnk_cmd->add_option("--table", t_table, "print the triangle for n <= N");
    tnk_cmd->add_option("--format", t_format, "text|csv|bfile")->check(CLI::IsMember({"text", "csv", "bfile"}));
    n_opt->needs(k_opt);
    k_opt->needs(n_opt);
    table_opt->excludes(n_opt)->excludes(k_opt);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("suite", verify_args.suite,
                           "recurrence|stabilization|shift|disparity|bijection|lemma45|partitions|conjecture|"
                           "golden|coefficients|classical|w-prefixes|w-t|appendix|weight-shortcut|boundary")
        ->required();
    verify_cmd->add_option("--max-n", verify_args.max_n, "upper bound on n");
    verify_cmd->add_option("--max-k", verify_args.max_k, "upper bound on k");
    verify_cmd->add_option("--max-d", verify_args.max_d, "upper bound on d");
    verify_cmd->add_option("--format", verify_args.format, "text|csv")->check(CLI::IsMember({"text", "csv"}));
    verify_cmd->add_option("--jobs", verify_args.jobs, "enumeration threads (0 = all cores)");

    std::string cache_action, cache_path;
    int cache_max_n = 12;
    auto* cache_cmd = app.add_subcommand("cache", "load or save the coefficient cache");
    cache_cmd->add_option("action", cache_action, "load|save")->required()->check(CLI::IsMember({"load", "save"}));
    cache_cmd->add_option("--path", cache_path, "cache file (default $QEULER_CACHE)");
    cache_cmd->add_option("--max-n", cache_max_n, "save: compute E_0..E_N first");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*weight_cmd)
            return cmd_weight(perm_text, shortcut, out);
        if (*en_cmd)
            return cmd_en(en_n, method, format, golden, jobs, out);
        if (*wd_cmd)
            return cmd_wd(wd_d, wd_terms, out);
        if (*tnk_cmd)
            return cmd_tnk(t_n, t_k, t_table, t_format, out);
        if (*verify_cmd)
            return cmd_verify(verify_args, out);
        if (*cache_cmd)
            return cmd_cache(cache_action, cache_path, cache_max_n, out);
    } catch (const std::exception& e) {
        err << "qeuler: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace qeuler
