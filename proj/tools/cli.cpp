#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "edp/discrepancy.hpp"
#include "edp/error.hpp"
#include "edp/primes.hpp"
#include "edp/rainbow.hpp"
#include "edp/rejmer.hpp"
#include "edp/search.hpp"
#include "edp/signs.hpp"
#include "edp/signs_io.hpp"
#include "edp/theorem1.hpp"

namespace edp::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
json nullable(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json sign_json(Sign s) { return value(s); }

// ---- files written during a run -------------------------------------------

class Outputs {
public:
    void write(const std::string& path, const std::string& bytes) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw usage_error("cannot write " + path);
        f << bytes;
        if (!f) throw usage_error("write failed: " + path);
        files_.emplace_back(path, sha256_hex(bytes));
    }
    const std::vector<std::pair<std::string, std::string>>& files() const { return files_; }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

std::string edpsigns_bytes(const SignSequence& s) {
    std::ostringstream o;
    write_edpsigns(o, s);
    return o.str();
}

// ---- assignments as JSON --------------------------------------------------

json assignment_json(const PrimeAssignment& a) {
    json overrides = json::array();
    for (const auto& [p, s] : a.overrides()) overrides.push_back({{"prime", p}, {"sign", sign_json(s)}});
    return {{"default_rule", to_string(a.default_rule())}, {"overrides", overrides}};
}

PrimeAssignment assignment_from_json(const json& j) {
    const json& w = j.contains("witness") ? j.at("witness") : j;
    if (w.is_null()) throw usage_error("witness is null");
    std::map<std::uint64_t, Sign> overrides;
    for (const auto& o : w.at("overrides")) overrides[o.at("prime").get<std::uint64_t>()] = sign_from_int(o.at("sign").get<int>());
    return PrimeAssignment(default_rule_from_string(w.at("default_rule").get<std::string>()), std::move(overrides));
}

// ---- colorings by name or file ---------------------------------------------

struct NamedColoring {
    Coloring coloring;
    std::optional<SignSequence> table;  // set when loaded from an EDPSIGNS file
};

NamedColoring load_coloring(const std::string& spec) {
    if (spec == "liouville") return {Coloring::liouville(), {}};
    if (spec == "bcc") return {Coloring::bcc(), {}};
    if (spec == "alternating") return {Coloring::alternating(), {}};
    if (!fs::exists(spec)) throw usage_error("unknown coloring '" + spec + "' (liouville, bcc, alternating, or a file)");
    std::ifstream f(spec, std::ios::binary);
    const int first = f.peek();
    if (first == '{') {
        json j;
        try {
            j = json::parse(f);
        } catch (const json::exception& e) {
            throw format_error(spec + ": " + e.what());
        }
        return {Coloring::multiplicative(assignment_from_json(j)), {}};
    }
    SignSequence s = read_edpsigns(fs::path(spec));
    if (s.start() != 1) throw usage_error(spec + ": sign file must start at 1");
    return {Coloring::table(s), s};
}

// ---- parsers for flag values -------------------------------------------------

std::vector<std::uint64_t> parse_list(const std::string& v) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("expected a comma-separated list of positive integers, got '" + v + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error("expected a non-negative integer, got '" + s + "'");
    return std::stoull(s);
}

// ---- CSV rendering --------------------------------------------------------------

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += csv_cell(v[i]);
        }
        return s;
    }
    return v.dump();
}

void flatten(const json& rec, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& cells) {
    for (const auto& [key, val] : rec.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (val.is_object())
            flatten(val, name, cells);
        else
            cells.emplace_back(name, csv_cell(val));
    }
}

std::string record_csv(const json& rec) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(rec, "", cells);
    std::string head, row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            head += ',';
            row += ',';
        }
        head += cells[i].first;
        row += cells[i].second;
    }
    return head + "\n" + row + "\n";
}

// ---- the run context shared by subcommands -------------------------------------

struct Context {
    unsigned threads = 1;
    bool csv = false;
    Outputs files;
    std::string report;  // bytes for the report stream
    int code = exit_ok;

    void emit(const json& rec, const std::string& table_csv = {}) {
        if (csv)
            report = table_csv.empty() ? record_csv(rec) : table_csv;
        else
            report = rec.dump(2) + "\n";
    }
};

// ---- subcommands ---------------------------------------------------------------------

struct ScanArgs {
    std::string coloring;
    std::uint64_t limit = 0;
    std::string steps = "all";
    std::string lengths = "all";
    std::optional<std::int64_t> bound;
};

void run_scan(const ScanArgs& a, Context& ctx) {
    const auto named = load_coloring(a.coloring);
    const CutePairSpec spec{parse_step_set(a.steps), parse_length_set(a.lengths)};
    const SignSequence table = named.table ? *named.table : materialize(named.coloring, a.limit);
    if (table.last() < a.limit) throw usage_error("sign file covers only 1.." + std::to_string(table.last()));

    const auto rows = scan_steps(table, a.limit, spec, ctx.threads);
    const auto r = reduce(rows);
    json rec{{"command", "scan"},
             {"coloring", a.coloring},
             {"limit", a.limit},
             {"steps", a.steps},
             {"lengths", a.lengths},
             {"max_abs_sum", r.max_abs_sum},
             {"witness", r.witness ? json{{"step", r.witness->step}, {"length", r.witness->length}} : json(nullptr)},
             {"scanned", r.scanned}};
    if (a.bound) {
        rec["bound"] = *a.bound;
        rec["pass"] = r.max_abs_sum <= *a.bound;
        if (r.max_abs_sum > *a.bound) ctx.code = exit_verification_failed;
    }
    std::string table_csv = "step,max_abs_sum,length,scanned\n";
    for (const auto& row : rows)
        table_csv += std::to_string(row.step) + "," + std::to_string(row.max_abs_sum) + "," + std::to_string(row.length) +
                     "," + std::to_string(row.scanned) + "\n";
    ctx.emit(rec, table_csv);
}

struct Theorem1Args {
    std::uint64_t k = 0;
    std::optional<std::uint64_t> verify_limit;
    std::string emit_signs;
};

void run_theorem1(const Theorem1Args& a, Context& ctx) {
    const auto c = construct_balanced(a.k);
    json exhaustive = json::array();
    for (const auto& [p, s] : c.exhaustive_signs) exhaustive.push_back({{"prime", p}, {"sign", sign_json(s)}});
    json rec{{"command", "theorem1"},
             {"k", a.k},
             {"S", c.initial_sum},
             {"flips", c.switched},
             {"status", to_string(c.status)},
             {"exhaustive_signs", exhaustive},
             {"final_sum", c.final_prefix_sum},
             {"verify_limit", nullable(a.verify_limit)},
             {"verified_max", nullptr},
             {"verified_witness", nullptr},
             {"verified_scanned", nullptr}};
    bool pass = c.status != ConstructionStatus::infeasible && (c.final_prefix_sum == 0 || c.final_prefix_sum == 1);
    if (a.verify_limit && c.status != ConstructionStatus::infeasible) {
        const auto r = verify_theorem1(a.k, *a.verify_limit, ctx.threads);
        rec["verified_max"] = r.max_abs_sum;
        rec["verified_witness"] = r.witness ? json{{"step", r.witness->step}, {"length", r.witness->length}} : json(nullptr);
        rec["verified_scanned"] = r.scanned;
        pass = pass && r.max_abs_sum <= 1;
    }
    rec["pass"] = pass;
    if (!a.emit_signs.empty()) {
        const std::uint64_t n = std::max(a.k, a.verify_limit.value_or(a.k));
        ctx.files.write(a.emit_signs, edpsigns_bytes(sieve_signs(extend(c), n)));
    }
    if (!pass) ctx.code = exit_verification_failed;
    ctx.emit(rec);
}

struct RejmerArgs {
    std::uint64_t steps = 0;
    std::string emit_signs;
    std::string log;
    std::string case1 = "minus";
};

void run_rejmer_cmd(const RejmerArgs& a, Context& ctx) {
    if (a.case1 != "plus" && a.case1 != "minus") throw usage_error("--case1-sign: expected plus or minus");
    const RejmerOptions opts{a.case1 == "plus" ? Sign::plus : Sign::minus};
    const auto run = run_rejmer(a.steps, opts);

    std::string log_csv = "step,prime,new_sign\n";
    for (const auto& s : run.log)
        log_csv += std::to_string(s.step) + "," + std::to_string(s.prime) + "," + std::to_string(value(s.new_sign)) + "\n";

    std::int64_t max_abs_prefix = 0;
    for (std::int64_t v : run.final.prefix_sums()) max_abs_prefix = std::max<std::int64_t>(max_abs_prefix, std::llabs(v));

    json rec{{"command", "rejmer"},
             {"steps", a.steps},
             {"case1_sign", a.case1},
             {"completed", run.final.size()},
             {"halted_at", nullable(run.halted_at)},
             {"switches", run.log.size()},
             {"final_sum", run.final.prefix_sum(run.final.last())},
             {"historical_violations", run.historical_violations},
             {"first_historical_violation", nullable(run.first_historical_violation)},
             {"max_abs_prefix_sum", max_abs_prefix}};
    if (!run.halted_at) {
        const auto dis = liouville_disagreements(run);
        rec["frozen_length"] = r_sequence(run).size();
        rec["liouville_disagreements"] = dis.size();
        rec["first_disagreements"] = std::vector<std::uint64_t>(dis.begin(), dis.begin() + std::min<std::size_t>(dis.size(), 32));
    } else {
        rec["frozen_length"] = nullptr;
        rec["liouville_disagreements"] = nullptr;
        rec["first_disagreements"] = nullptr;
    }
    if (!a.emit_signs.empty()) ctx.files.write(a.emit_signs, edpsigns_bytes(run.final));
    if (!a.log.empty()) ctx.files.write(a.log, log_csv);
    if (run.halted_at) ctx.code = exit_verification_failed;
    ctx.emit(rec, log_csv);
}

json scan_json(const std::string& command, const ScanResult& r) {
    return {{"command", command},   {"limit", r.limit},   {"first_violation", nullable(r.first_violation)},
            {"max_sum", r.max_sum}, {"argmax", r.argmax}, {"min_sum", r.min_sum},
            {"argmin", r.argmin},   {"final_sum", r.final_sum}};
}

struct PolyaArgs {
    std::uint64_t limit = 0;
    std::uint64_t segment = std::uint64_t{1} << 20;
    std::string primes;
};

void run_polya(const PolyaArgs& a, Context& ctx) {
    ctx.emit(scan_json("polya", polya_scan(a.limit, {a.segment, ctx.threads})));
}

void run_flip(const PolyaArgs& a, Context& ctx) {
    const auto flips = parse_list(a.primes);
    json rec = scan_json("flip", flip_experiment(flips, a.limit, {a.segment, ctx.threads}));
    rec["flips"] = flips;
    ctx.emit(rec);
}

struct MinhArgs {
    std::uint64_t horizon = 0;
    std::string mode = "upper";
    std::uint64_t budget = kDefaultNodeBudget;
};

void run_minh(const MinhArgs& a, Context& ctx) {
    BoundMode mode;
    if (a.mode == "upper")
        mode = BoundMode::upper_only;
    else if (a.mode == "two")
        mode = BoundMode::two_sided;
    else
        throw usage_error("--mode: expected upper or two");
    const auto r = min_h(a.horizon, mode, a.budget);
    json rec{{"command", "minh"},
             {"horizon", a.horizon},
             {"mode", a.mode},
             {"budget", a.budget},
             {"h", nullable(r.h)},
             {"unknown_at", r.h ? json(nullptr) : json(r.unknown_at)},
             {"nodes", r.nodes},
             {"witness", r.witness ? assignment_json(*r.witness) : json(nullptr)}};
    if (!r.h) ctx.code = exit_budget_exhausted;
    ctx.emit(rec);
}

struct RainbowArgs {
    std::uint64_t k = 0;
    std::uint64_t limit = 0;
    std::uint64_t budget = 10'000'000;
    std::optional<std::uint64_t> seed;
    std::string emit;
    std::string verify;
};

KColoring read_kcoloring(const std::string& path, std::uint64_t k, std::uint64_t N) {
    std::ifstream f(path);
    if (!f) throw usage_error("cannot read " + path);
    std::vector<std::uint32_t> colors(N, 0);
    std::vector<bool> seen(N + 1, false);
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint64_t n = 0, c = 0;
        std::string extra;
        if (!(ls >> n >> c) || (ls >> extra))
            throw format_error(path + ":" + std::to_string(lineno) + ": expected 'n color'");
        if (n == 0 || n > N) continue;
        if (c >= k) throw format_error(path + ":" + std::to_string(lineno) + ": color out of range");
        colors[n - 1] = static_cast<std::uint32_t>(c);
        seen[n] = true;
    }
    for (std::uint64_t n = 1; n <= N; ++n)
        if (!seen[n]) throw format_error(path + ": no color for " + std::to_string(n));
    return KColoring(k, std::move(colors));
}

void run_rainbow(const RainbowArgs& a, Context& ctx) {
    if (!a.verify.empty()) {
        const auto c = read_kcoloring(a.verify, a.k, a.limit);
        const auto r = verify_rainbow(c, a.limit);
        json rec{{"command", "rainbow"},
                 {"mode", "verify"},
                 {"k", a.k},
                 {"limit", a.limit},
                 {"ok", r.ok},
                 {"step", nullable(r.step)},
                 {"clash", r.clash ? json{r.clash->first, r.clash->second} : json(nullptr)}};
        if (!r.ok) ctx.code = exit_verification_failed;
        ctx.emit(rec);
        return;
    }
    const auto s = search_rainbow(a.k, a.limit, a.budget, a.seed);
    json rec{{"command", "rainbow"}, {"mode", "search"},          {"k", a.k},
             {"limit", a.limit},     {"budget", a.budget},        {"seed", nullable(a.seed)},
             {"status", to_string(s.status)}, {"nodes", s.nodes}, {"verified", nullptr},
             {"proper", nullptr},    {"split_max_abs_sum", nullptr}};
    if (s.coloring) {
        const auto v = verify_rainbow(*s.coloring, a.limit);
        const bool proper = is_proper(*s.coloring, GkGraph(a.k, a.limit));
        const auto split = scan_max_discrepancy(split_to_balanced(*s.coloring), a.limit,
                                                {StepSet::all(), LengthSet::singleton(a.k)}, ctx.threads);
        rec["verified"] = v.ok;
        rec["proper"] = proper;
        rec["split_max_abs_sum"] = split.max_abs_sum;
        if (!v.ok || !proper || split.max_abs_sum > 1) ctx.code = exit_verification_failed;
        if (!a.emit.empty()) {
            std::string bytes;
            for (std::uint64_t n = 1; n <= a.limit; ++n)
                bytes += std::to_string(n) + " " + std::to_string(s.coloring->color(n)) + "\n";
            ctx.files.write(a.emit, bytes);
        }
    }
    if (s.status == RainbowStatus::budget_exceeded) ctx.code = exit_budget_exhausted;
    ctx.emit(rec);
}

struct GrahamArgs {
    std::string values;
    std::string range;
};

void run_graham(const GrahamArgs& a, Context& ctx) {
    std::vector<std::uint64_t> values;
    if (!a.values.empty()) {
        std::ifstream f(a.values);
        if (!f) throw usage_error("cannot read " + a.values);
        std::string tok;
        while (f >> tok) values.push_back(parse_u64(tok));
    } else {
        const auto dots = a.range.find("..");
        if (dots == std::string::npos) throw usage_error("--range: expected a..b");
        const std::uint64_t lo = parse_u64(a.range.substr(0, dots));
        const std::uint64_t hi = parse_u64(a.range.substr(dots + 2));
        if (lo > hi) throw usage_error("--range: empty range");
        for (std::uint64_t v = lo; v <= hi; ++v) values.push_back(v);
    }
    const auto w = graham_witness(values);
    json rec{{"command", "graham"}, {"n", w.n}, {"a", w.a}, {"b", w.b}, {"ratio", w.ratio}, {"holds", w.holds}};
    if (!w.holds) ctx.code = exit_verification_failed;
    ctx.emit(rec);
}

struct PrimesArgs {
    std::string check;
    std::uint64_t x = 0;
};

void run_primes(const PrimesArgs& a, Context& ctx) {
    json rec;
    bool pass = false;
    if (a.check == "mccurley") {
        const auto r = check_mccurley(a.x, sieve_primes(a.x));
        rec = {{"command", "primes"}, {"check", a.check}, {"x", r.x},         {"theta", r.theta},
               {"lower", r.lower},    {"upper", r.upper}, {"ratio", r.ratio}, {"pass", r.pass}};
        pass = r.pass;
    } else if (a.check == "fbound") {
        const auto r = check_f_bound(a.x, sieve_primes(2 * a.x));
        rec = {{"command", "primes"}, {"check", a.check}, {"x", r.x},
               {"count", r.count},    {"bound", r.bound}, {"pass", r.pass}};
        pass = r.pass;
    } else {
        throw usage_error("--check: expected mccurley or fbound");
    }
    if (!pass) ctx.code = exit_verification_failed;
    ctx.emit(rec);
}

void run_bcc_check(std::uint64_t limit, Context& ctx) {
    if (limit == 0) throw usage_error("--limit must be positive");
    const auto table = sieve_signs(PrimeAssignment::bcc(), limit);
    std::uint64_t violations = 0, bound_violations = 0;
    std::optional<std::uint64_t> first;
    std::int64_t max_sum = 0;
    std::uint64_t ceil_log3 = 0, pow3 = 1;  // smallest e with 3^e >= k
    for (std::uint64_t k = 1; k <= limit; ++k) {
        while (pow3 < k) {
            pow3 *= 3;
            ++ceil_log3;
        }
        const std::int64_t sum = table.prefix_sum(k);
        max_sum = std::max(max_sum, sum);
        if (sum != static_cast<std::int64_t>(count_ones_base3(k))) {
            ++violations;
            if (!first) first = k;
        }
        if (sum < 0 || sum > static_cast<std::int64_t>(ceil_log3) + 1) ++bound_violations;
    }
    json rec{{"command", "bcc-check"},     {"limit", limit},
             {"checked", limit},           {"violations", violations},
             {"first_violation", nullable(first)}, {"bound_violations", bound_violations},
             {"max_sum", max_sum}};
    if (violations || bound_violations) ctx.code = exit_verification_failed;
    ctx.emit(rec);
}

// ---- manifest --------------------------------------------------------------------

json parameters_of(const CLI::App& app) {
    json params = json::object();
    for (const CLI::Option* opt : app.get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name == "version" || name.empty()) continue;
        if (opt->get_expected_max() == 0) {
            params[name] = opt->count() > 0;
        } else if (opt->count() == 0) {
            const std::string d = opt->get_default_str();
            params[name] = d.empty() ? json(nullptr) : json(d);
        } else {
            params[name] = opt->results().back();
        }
    }
    return params;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream o;
    for (unsigned int i = 0; i < len; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return o.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, json* manifest) {
    CLI::App app{"Experiments on balanced multiplicative colorings of homogeneous arithmetic progressions", "edp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    Context ctx;
    std::string manifest_path;
    app.add_option("--threads", ctx.threads, "worker threads (outputs do not depend on it)")
        ->envname("EDP_THREADS")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_flag("--csv", ctx.csv, "tabular CSV instead of JSON");
    app.add_option("--manifest", manifest_path, "write the run manifest to FILE");

    std::function<void()> action;

    ScanArgs scan;
    auto* s_scan = app.add_subcommand("scan", "max |HAP sum| of a coloring over a step/length family");
    s_scan->add_option("--coloring", scan.coloring, "liouville, bcc, alternating, an EDPSIGNS file or a witness JSON")->required();
    s_scan->add_option("--limit", scan.limit, "largest element s*k")->required()->check(CLI::PositiveNumber);
    s_scan->add_option("--steps", scan.steps, "odd, all, or a comma list")->capture_default_str();
    s_scan->add_option("--lengths", scan.lengths, "all, k=<k>, base3free or a comma list")->capture_default_str();
    s_scan->add_option("--bound", scan.bound, "exit 1 if the maximum exceeds this");
    s_scan->callback([&] { action = [&] { run_scan(scan, ctx); }; });

    Theorem1Args t1;
    auto* s_t1 = app.add_subcommand("theorem1", "balanced multiplicative coloring for one length k");
    s_t1->add_option("--k", t1.k)->required()->check(CLI::PositiveNumber);
    s_t1->add_option("--verify-limit", t1.verify_limit, "scan every A_{s,k} with s*k <= N");
    s_t1->add_option("--emit-signs", t1.emit_signs, "write the extended coloring as EDPSIGNS");
    s_t1->callback([&] { action = [&] { run_theorem1(t1, ctx); }; });

    RejmerArgs rj;
    auto* s_rj = app.add_subcommand("rejmer", "greedy balanced multiplicative coloring");
    s_rj->add_option("--steps", rj.steps)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{2'000'000'000}));
    s_rj->add_option("--emit-signs", rj.emit_signs, "write the final coloring as EDPSIGNS");
    s_rj->add_option("--log", rj.log, "write the switch log as CSV");
    s_rj->add_option("--case1-sign", rj.case1, "sign for new odd primes")->capture_default_str();
    s_rj->callback([&] { action = [&] { run_rejmer_cmd(rj, ctx); }; });

    PolyaArgs polya;
    auto* s_polya = app.add_subcommand("polya", "Liouville partial sums");
    s_polya->add_option("--limit", polya.limit)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    s_polya->add_option("--segment", polya.segment, "sieve segment size")->capture_default_str()->check(CLI::PositiveNumber);
    s_polya->callback([&] { action = [&] { run_polya(polya, ctx); }; });

    PolyaArgs flip;
    auto* s_flip = app.add_subcommand("flip", "Liouville with listed primes switched to +1");
    s_flip->add_option("--primes", flip.primes, "comma list, e.g. 2,3")->required();
    s_flip->add_option("--limit", flip.limit)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    s_flip->add_option("--segment", flip.segment, "sieve segment size")->capture_default_str()->check(CLI::PositiveNumber);
    s_flip->callback([&] { action = [&] { run_flip(flip, ctx); }; });

    MinhArgs minh;
    auto* s_minh = app.add_subcommand("minh", "least h admitting a multiplicative coloring with bounded prefix sums");
    s_minh->add_option("--horizon", minh.horizon)->required()->check(CLI::PositiveNumber);
    s_minh->add_option("--mode", minh.mode, "upper or two")->capture_default_str();
    s_minh->add_option("--budget", minh.budget, "search node budget")->capture_default_str()->check(CLI::PositiveNumber);
    s_minh->callback([&] { action = [&] { run_minh(minh, ctx); }; });

    RainbowArgs rb;
    auto* s_rb = app.add_subcommand("rainbow", "search or verify a rainbow k-coloring of 1..N");
    s_rb->add_option("--k", rb.k)->required()->check(CLI::PositiveNumber);
    s_rb->add_option("--limit", rb.limit)->required()->check(CLI::PositiveNumber);
    s_rb->add_option("--budget", rb.budget, "search node budget")->capture_default_str()->check(CLI::PositiveNumber);
    s_rb->add_option("--seed", rb.seed, "shuffle color order (not used by acceptance runs)");
    s_rb->add_option("--emit", rb.emit, "write the coloring as lines 'n color'");
    s_rb->add_option("--verify", rb.verify, "verify a coloring file instead of searching");
    s_rb->callback([&] { action = [&] { run_rainbow(rb, ctx); }; });

    GrahamArgs gr;
    auto* s_gr = app.add_subcommand("graham", "max a/gcd(a,b) over a set of distinct integers");
    auto* gv = s_gr->add_option("--values", gr.values, "file of whitespace-separated integers");
    auto* gra = s_gr->add_option("--range", gr.range, "a..b");
    gv->excludes(gra);
    s_gr->require_option(1);
    s_gr->callback([&] { action = [&] { run_graham(gr, ctx); }; });

    PrimesArgs pr;
    auto* s_pr = app.add_subcommand("primes", "theta(x;3,1) and f(x) bound checks");
    s_pr->add_option("--check", pr.check, "mccurley or fbound")->required();
    s_pr->add_option("--x", pr.x)->required()->check(CLI::PositiveNumber);
    s_pr->callback([&] { action = [&] { run_primes(pr, ctx); }; });

    std::uint64_t bcc_limit = 0;
    auto* s_bcc = app.add_subcommand("bcc-check", "prefix sums of the base-3 coloring against ternary digit counts");
    s_bcc->add_option("--limit", bcc_limit)->required()->check(CLI::PositiveNumber);
    s_bcc->callback([&] { action = [&] { run_bcc_check(bcc_limit, ctx); }; });

    const auto t0 = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return exit_usage;
    }

    try {
        action();
    } catch (const usage_error& e) {
        err << "edp: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "edp: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "edp: " << e.what() << "\n";
        return exit_usage;
    } catch (const format_error& e) {
        err << "edp: " << e.what() << "\n";
        return exit_usage;
    } catch (const fs::filesystem_error& e) {
        err << "edp: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "edp: internal error: " << e.what() << "\n";
        return exit_internal;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    out << ctx.report;
    out.flush();

    const CLI::App* sub = app.get_subcommands().front();
    json files = json::object();
    for (const auto& [path, digest] : ctx.files.files()) files[path] = digest;
    json m{{"artifact", "edp"},
           {"version", kVersion},
           {"subcommand", sub->get_name()},
           {"parameters", parameters_of(*sub)},
           {"global", parameters_of(app)},
           {"exit_code", ctx.code},
           {"wall_seconds", wall},
           {"outputs", {{"stdout", sha256_hex(ctx.report)}, {"files", files}}}};
    if (manifest) *manifest = m;
    if (!manifest_path.empty()) {
        std::ofstream f(manifest_path, std::ios::binary);
        if (!f) {
            err << "edp: cannot write " << manifest_path << "\n";
            return exit_usage;
        }
        f << m.dump(2) << "\n";
    }
    return ctx.code;
}

}  // namespace edp::cli
