#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "edp/discrepancy.hpp"
#include "edp/primes.hpp"
#include "edp/rainbow.hpp"
#include "edp/rejmer.hpp"
#include "edp/search.hpp"
#include "edp/signs.hpp"
#include "edp/theorem1.hpp"

namespace py = pybind11;
using namespace edp;

namespace {

py::object opt(const std::optional<std::uint64_t>& v) { return v ? py::object(py::int_(*v)) : py::none(); }

std::vector<int> as_ints(const SignSequence& s) { return {s.raw().begin(), s.raw().end()}; }

Coloring coloring_from(const py::object& c) {
    if (py::isinstance<py::str>(c)) {
        const auto name = c.cast<std::string>();
        if (name == "liouville") return Coloring::liouville();
        if (name == "bcc") return Coloring::bcc();
        if (name == "alternating") return Coloring::alternating();
        throw py::value_error("unknown coloring '" + name + "'");
    }
    return Coloring::multiplicative(c.cast<PrimeAssignment>());
}

py::dict balance_dict(const BalanceReport& r) {
    py::dict d;
    d["max_abs_sum"] = r.max_abs_sum;
    d["witness"] = r.witness ? py::object(py::make_tuple(r.witness->step, r.witness->length)) : py::none();
    d["scanned"] = r.scanned;
    return d;
}

py::dict scan_dict(const ScanResult& r) {
    py::dict d;
    d["limit"] = r.limit;
    d["first_violation"] = opt(r.first_violation);
    d["max_sum"] = r.max_sum;
    d["argmax"] = r.argmax;
    d["min_sum"] = r.min_sum;
    d["argmin"] = r.argmin;
    d["final_sum"] = r.final_sum;
    return d;
}

BoundMode mode_from(const std::string& m) {
    if (m == "upper") return BoundMode::upper_only;
    if (m == "two") return BoundMode::two_sided;
    throw py::value_error("mode must be 'upper' or 'two'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Balanced multiplicative colorings, greedy and exhaustive searches, partial-sum scans.";

    py::class_<PrimeAssignment>(m, "PrimeAssignment")
        .def(py::init([](const std::string& rule, const std::map<std::uint64_t, int>& overrides) {
                 std::map<std::uint64_t, Sign> o;
                 for (const auto& [p, s] : overrides) o[p] = sign_from_int(s);
                 return PrimeAssignment(default_rule_from_string(rule), std::move(o));
             }),
             py::arg("default_rule") = "all_minus", py::arg("overrides") = std::map<std::uint64_t, int>{})
        .def_static("liouville", &PrimeAssignment::liouville)
        .def_static("bcc", &PrimeAssignment::bcc)
        .def_property_readonly("default_rule", [](const PrimeAssignment& a) { return to_string(a.default_rule()); })
        .def_property_readonly("overrides",
                               [](const PrimeAssignment& a) {
                                   std::map<std::uint64_t, int> o;
                                   for (const auto& [p, s] : a.overrides()) o[p] = value(s);
                                   return o;
                               })
        .def("__call__", [](const PrimeAssignment& a, std::uint64_t n) { return value(eval(Coloring::multiplicative(a), n)); })
        .def("signs", [](const PrimeAssignment& a, std::uint64_t N) { return as_ints(sieve_signs(a, N)); }, py::arg("N"))
        .def("__eq__", [](const PrimeAssignment& a, const PrimeAssignment& b) { return a == b; })
        .def("__repr__", [](const PrimeAssignment& a) {
            std::ostringstream o;
            o << "PrimeAssignment('" << to_string(a.default_rule()) << "', " << a.overrides().size() << " overrides)";
            return o.str();
        });

    m.def("eval", [](const py::object& c, std::uint64_t n) { return value(eval(coloring_from(c), n)); }, py::arg("coloring"),
          py::arg("n"));
    m.def("signs", [](const py::object& c, std::uint64_t N) { return as_ints(materialize(coloring_from(c), N)); },
          py::arg("coloring"), py::arg("N"));
    m.def("count_ones_base3", &count_ones_base3, py::arg("k"));

    m.def("primes_upto", [](std::uint64_t n) {
        const auto t = sieve_primes(n);
        return std::vector<std::uint64_t>(t.primes().begin(), t.primes().end());
    }, py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("theta_3_1", [](std::uint64_t x) { return theta_3_1(x, sieve_primes(x)).theta; }, py::arg("x"));
    m.def("count_f", [](std::uint64_t x) { return count_f(x, sieve_primes(2 * x)); }, py::arg("x"));
    m.def("check_mccurley", [](std::uint64_t x) {
        const auto r = check_mccurley(x, sieve_primes(x));
        py::dict d;
        d["x"] = r.x;
        d["theta"] = r.theta;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["ratio"] = r.ratio;
        d["pass"] = r.pass;
        return d;
    }, py::arg("x"));
    m.def("check_f_bound", [](std::uint64_t x) {
        const auto r = check_f_bound(x, sieve_primes(2 * x));
        py::dict d;
        d["x"] = r.x;
        d["count"] = r.count;
        d["bound"] = r.bound;
        d["pass"] = r.pass;
        return d;
    }, py::arg("x"));

    m.def("hap_sum", [](const py::object& c, std::uint64_t s, std::uint64_t k) { return hap_sum(coloring_from(c), {s, k}); },
          py::arg("coloring"), py::arg("step"), py::arg("length"));
    m.def("scan_max_discrepancy",
          [](const py::object& c, std::uint64_t N, const std::string& steps, const std::string& lengths, unsigned threads) {
              return balance_dict(
                  scan_max_discrepancy(coloring_from(c), N, {parse_step_set(steps), parse_length_set(lengths)}, threads));
          },
          py::arg("coloring"), py::arg("N"), py::arg("steps") = "all", py::arg("lengths") = "all", py::arg("threads") = 1);

    m.def("construct_balanced", [](std::uint64_t k) {
        const auto c = construct_balanced(k);
        py::dict d;
        d["k"] = c.k;
        d["initial_sum"] = c.initial_sum;
        d["flips"] = c.switched;
        d["final_sum"] = c.final_prefix_sum;
        d["status"] = to_string(c.status);
        d["assignment"] = extend(c);
        return d;
    }, py::arg("k"));
    m.def("verify_theorem1",
          [](std::uint64_t k, std::uint64_t N, unsigned threads) { return balance_dict(verify_theorem1(k, N, threads)); },
          py::arg("k"), py::arg("N"), py::arg("threads") = 1);

    m.def("run_rejmer", [](std::uint64_t N, int case1_sign) {
        const auto run = run_rejmer(N, {sign_from_int(case1_sign)});
        py::list log;
        for (const auto& s : run.log) log.append(py::make_tuple(s.step, s.prime, value(s.new_sign)));
        py::dict d;
        d["signs"] = as_ints(run.final);
        d["log"] = log;
        d["halted_at"] = opt(run.halted_at);
        d["historical_violations"] = run.historical_violations;
        d["first_historical_violation"] = opt(run.first_historical_violation);
        return d;
    }, py::arg("N"), py::arg("case1_sign") = -1);
    m.def("r_sequence", [](std::uint64_t N) { return as_ints(r_sequence(N)); }, py::arg("N"));
    m.def("liouville_disagreements", [](std::uint64_t N) { return liouville_disagreements(N); }, py::arg("N"));

    m.def("polya_scan", [](std::uint64_t limit, std::uint64_t segment, unsigned threads) {
        return scan_dict(polya_scan(limit, {segment, threads}));
    }, py::arg("limit"), py::arg("segment") = std::uint64_t{1} << 20, py::arg("threads") = 1);
    m.def("flip_experiment", [](const std::vector<std::uint64_t>& primes, std::uint64_t limit) {
        return scan_dict(flip_experiment(primes, limit));
    }, py::arg("primes"), py::arg("limit"));
    m.def("bounded_sum_search", [](std::uint64_t horizon, std::int64_t h, const std::string& mode, std::uint64_t budget) {
        const auto r = bounded_sum_search({horizon, h, mode_from(mode), budget});
        py::dict d;
        d["status"] = to_string(r.status);
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        d["nodes"] = r.nodes;
        return d;
    }, py::arg("horizon"), py::arg("h"), py::arg("mode") = "upper", py::arg("budget") = kDefaultNodeBudget);
    m.def("min_h", [](std::uint64_t horizon, const std::string& mode, std::uint64_t budget) {
        const auto r = min_h(horizon, mode_from(mode), budget);
        py::dict d;
        d["h"] = r.h ? py::object(py::int_(*r.h)) : py::none();
        d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        d["nodes"] = r.nodes;
        return d;
    }, py::arg("horizon"), py::arg("mode") = "upper", py::arg("budget") = kDefaultNodeBudget);

    m.def("gk_adjacent", &gk_adjacent, py::arg("r"), py::arg("s"), py::arg("k"));
    m.def("verify_rainbow", [](std::uint64_t k, const std::vector<std::uint32_t>& colors) {
        const auto r = verify_rainbow(KColoring(k, colors), colors.size());
        py::dict d;
        d["ok"] = r.ok;
        d["step"] = opt(r.step);
        d["clash"] = r.clash ? py::object(py::make_tuple(r.clash->first, r.clash->second)) : py::none();
        return d;
    }, py::arg("k"), py::arg("colors"), "colors[i] is the color of i + 1");
    m.def("search_rainbow", [](std::uint64_t k, std::uint64_t N, std::uint64_t budget, std::optional<std::uint64_t> seed) {
        const auto r = search_rainbow(k, N, budget, seed);
        py::dict d;
        d["status"] = to_string(r.status);
        d["colors"] = r.coloring ? py::cast(r.coloring->colors()) : py::none();
        d["nodes"] = r.nodes;
        return d;
    }, py::arg("k"), py::arg("N"), py::arg("budget") = 10'000'000, py::arg("seed") = py::none());
    m.def("graham_witness", [](const std::vector<std::uint64_t>& values) {
        const auto w = graham_witness(values);
        py::dict d;
        d["a"] = w.a;
        d["b"] = w.b;
        d["ratio"] = w.ratio;
        d["n"] = w.n;
        d["holds"] = w.holds;
        return d;
    }, py::arg("values"));

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run one `edp` invocation in-process; returns (exit_code, stdout, stderr).");

    m.attr("__version__") = cli::kVersion;
}
