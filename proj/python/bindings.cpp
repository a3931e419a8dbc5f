#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlog2/bench.hpp"
#include "dlog2/halving.hpp"
#include "dlog2/oracles.hpp"
#include "dlog2/primes.hpp"
#include "dlog2/serialize.hpp"

namespace py = pybind11;
using namespace dlog2;

namespace {

std::vector<std::pair<u64, unsigned>> factor_pairs(const Factorization& f) {
  std::vector<std::pair<u64, unsigned>> out;
  for (const auto& [q, e] : f.factors) out.emplace_back(q, e);
  return out;
}

DlpInstance instance(const CertifiedPrime& cp, u64 g, u64 b) {
  return DlpInstance(cp, Residue(g, cp.p), Residue(b, cp.p));
}

BenchMode parse_mode(const std::string& mode) {
  if (mode == "all") return BenchMode::kAll;
  if (mode == "worst") return BenchMode::kWorst;
  if (mode == "sample") return BenchMode::kSample;
  throw Error(ErrorCode::kBadInput, "mode must be all, worst or sample");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Base-2 discrete logarithms in F_p^* by halving and negation";

  static py::exception<Error> dlog_error(m, "DlogError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ep) {
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const Error& e) {
      py::set_error(dlog_error,
                    (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("pow_mod", &pow_mod_u64, py::arg("base"), py::arg("e"), py::arg("m"));
  m.def(
      "two_adic_valuation",
      [](u64 n) {
        const Valuation v = two_adic_valuation(n);
        return std::make_pair(v.k, v.odd_part);
      },
      py::arg("n"), "Returns (k, odd_part) with n = 2**k * odd_part.");

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def(
      "factorize", [](u64 n) { return factor_pairs(factorize(n)); },
      py::arg("n"), "Prime factorization as ascending (prime, exponent) pairs.");
  m.def("necessary_condition", &necessary_condition, py::arg("p"));

  py::class_<CertifiedPrime>(m, "CertifiedPrime")
      .def_property_readonly("p", &CertifiedPrime::value)
      .def_property_readonly("p_minus_1",
                             [](const CertifiedPrime& cp) {
                               return factor_pairs(cp.p_minus_1);
                             })
      .def_readonly("two_is_primitive", &CertifiedPrime::two_is_primitive)
      .def_readonly("meets_necessary_condition",
                    &CertifiedPrime::meets_necessary_condition)
      .def("__repr__", [](const CertifiedPrime& cp) {
        return "CertifiedPrime(p=" + std::to_string(cp.value()) +
               ", two_is_primitive=" + (cp.two_is_primitive ? "True" : "False") +
               ")";
      });

  m.def("certify", &certify, py::arg("p"));
  m.def("enumerate_artin2_primes",
        [](u64 lo, u64 hi) { return enumerate_artin2_primes(lo, hi); },
        py::arg("lo"), py::arg("hi"));
  m.def(
      "is_primitive_root",
      [](u64 g, u64 p) {
        const CertifiedPrime cp = certify(p);
        return is_primitive_root(Residue(g, cp.p), cp);
      },
      py::arg("g"), py::arg("p"));

  py::enum_<StepKind>(m, "StepKind")
      .value("HALVE", StepKind::kHalve)
      .value("NEGATE", StepKind::kNegate);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("kind", &TraceStep::kind)
      .def_readonly("k", &TraceStep::k)
      .def_readonly("b_before", &TraceStep::b_before)
      .def_readonly("b_after", &TraceStep::b_after)
      .def_readonly("out_after", &TraceStep::out_after)
      .def("__repr__", [](const TraceStep& s) {
        return std::string("TraceStep(") + to_string(s.kind) + ", k=" +
               std::to_string(s.k) + ", " + std::to_string(s.b_before) +
               " -> " + std::to_string(s.b_after) +
               ", out=" + std::to_string(s.out_after) + ")";
      });

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("p",
                             [](const SolveReport& r) { return r.p.value(); })
      .def_property_readonly("b",
                             [](const SolveReport& r) { return r.b.value(); })
      .def_property_readonly(
          "result", [](const SolveReport& r) { return r.result.value(); })
      .def_readonly("trace", &SolveReport::trace)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("elapsed", &SolveReport::elapsed)
      .def("to_json", &report_to_json, py::arg("indent") = 2)
      .def("to_text", &report_to_text);

  m.def(
      "solve",
      [](u64 p, u64 b, bool trace) {
        const CertifiedPrime cp = certify_artin2(p);
        py::gil_scoped_release release;
        return solve_halving_negation(cp, Residue(b, cp.p),
                                      {.record_trace = trace});
      },
      py::arg("p"), py::arg("b"), py::arg("trace") = false,
      "log_2(b) in F_p^*; p must have 2 as a primitive root.");
  m.def("report_from_json", &report_from_json, py::arg("text"));
  m.def(
      "validate_trace",
      [](const SolveReport& r) {
        std::vector<std::pair<py::object, std::string>> out;
        for (const auto& v : validate_trace(r)) {
          py::object step = v.step == TraceViolation::npos
                                ? py::object(py::none())
                                : py::object(py::int_(v.step));
          out.emplace_back(step, v.message);
        }
        return out;
      },
      py::arg("report"),
      "List of (step index or None, message); empty when consistent.");
  m.def(
      "log_minus_one",
      [](u64 p) { return log_minus_one(certify(p)).value(); }, py::arg("p"));
  m.def(
      "worst_case_input",
      [](u64 p) {
        const WorstCase w = worst_case_input(certify(p));
        return std::make_pair(w.b.value(), w.expected.value());
      },
      py::arg("p"), "Returns (b, expected log).");

  m.def(
      "brute_force_dlog",
      [](u64 p, u64 g, u64 b) {
        const CertifiedPrime cp = certify(p);
        return brute_force_dlog(instance(cp, g, b)).value();
      },
      py::arg("p"), py::arg("g"), py::arg("b"));
  m.def(
      "bsgs_dlog",
      [](u64 p, u64 g, u64 b) {
        const CertifiedPrime cp = certify(p);
        return bsgs_dlog(instance(cp, g, b)).value();
      },
      py::arg("p"), py::arg("g"), py::arg("b"));
  m.def(
      "lemma_negation_check",
      [](u64 p, u64 g, u64 a) {
        const CertifiedPrime cp = certify(p);
        return lemma_negation_check(cp, Residue(g, cp.p), Residue(a, cp.p));
      },
      py::arg("p"), py::arg("g"), py::arg("a"));
  m.def(
      "generator_independence_check",
      [](u64 p) { return generator_independence_check(certify(p)); },
      py::arg("p"));

  m.def(
      "run_bench",
      [](std::vector<u64> primes, const std::string& mode, u64 samples,
         u64 seed, u64 brute_max) {
        BenchConfig config;
        config.primes = std::move(primes);
        config.mode = parse_mode(mode);
        config.samples = samples;
        config.seed = seed;
        config.brute_max = brute_max;
        std::vector<py::dict> rows;
        for (const BenchRecord& r : run_bench(config)) {
          py::dict row;
          row["p"] = r.p;
          row["b"] = r.b;
          row["algorithm"] = to_string(r.algorithm);
          row["result"] = r.result;
          row["iterations"] = r.iterations;
          row["elapsed_nanos"] = r.elapsed_nanos;
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("primes"), py::arg("mode") = "worst", py::arg("samples") = 16,
      py::arg("seed") = 1, py::arg("brute_max") = 10'000'000);
  m.def(
      "run_verify",
      [](u64 p_max) {
        const VerifySummary s = run_verify({.p_max = p_max});
        py::dict out;
        out["primes"] = s.primes;
        out["instances_checked"] = s.instances_checked;
        out["oracle_mismatches"] = s.oracle_mismatches;
        out["trace_violations"] = s.trace_violations;
        out["lemma_failures"] = s.lemma_failures;
        out["bound_violations"] = s.bound_violations;
        out["golden_checked"] = s.golden_checked;
        out["golden_ok"] = s.golden_ok;
        out["failures"] = s.total_failures();
        return out;
      },
      py::arg("p_max") = 2000);
}
