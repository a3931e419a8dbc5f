#include "dlog2/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace dlog2 {

using nlohmann::json;

std::string report_to_json(const SolveReport& report, int indent) {
  json doc;
  doc["p"] = report.p.value();
  doc["b"] = report.b.value();
  doc["result"] = report.result.value();
  doc["iterations"] = report.iterations;
  if (report.trace) {
    json steps = json::array();
    for (const TraceStep& s : *report.trace) {
      json step;
      step["kind"] = to_string(s.kind);
      if (s.kind == StepKind::kHalve) step["k"] = s.k;
      step["b_before"] = s.b_before;
      step["b_after"] = s.b_after;
      step["out_after"] = s.out_after;
      steps.push_back(std::move(step));
    }
    doc["steps"] = std::move(steps);
  } else {
    doc["steps"] = nullptr;
  }
  return doc.dump(indent);
}

SolveReport report_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const Modulus p(doc.at("p").get<u64>());
    const Residue b(doc.at("b").get<u64>(), p);
    const Exponent result(doc.at("result").get<u64>(), p.group_order());
    std::optional<std::vector<TraceStep>> trace;
    const json& steps = doc.at("steps");
    if (!steps.is_null()) {
      trace.emplace();
      for (const json& step : steps) {
        const auto kind = step.at("kind").get<std::string>();
        TraceStep s{};
        if (kind == "halve") {
          s.kind = StepKind::kHalve;
          s.k = step.at("k").get<unsigned>();
        } else if (kind == "negate") {
          s.kind = StepKind::kNegate;
          s.k = 0;
        } else {
          throw Error(ErrorCode::kBadInput, "unknown step kind '" + kind + "'");
        }
        s.b_before = step.at("b_before").get<u64>();
        s.b_after = step.at("b_after").get<u64>();
        s.out_after = step.at("out_after").get<u64>();
        trace->push_back(s);
      }
    }
    return SolveReport{p, b, result, std::move(trace),
                       doc.at("iterations").get<u64>(),
                       std::chrono::nanoseconds{0}};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBadInput,
                std::string("malformed solve report: ") + e.what());
  }
}

std::string report_to_text(const SolveReport& report) {
  const u64 p = report.p.value();
  std::ostringstream os;
  os << "log_2(" << report.b.value() << ") in F_" << p << "^*\n";
  if (report.trace) {
    os << "step  operation     b_before ->  b_after  out\n";
    std::size_t i = 0;
    for (const TraceStep& s : *report.trace) {
      std::string op = s.kind == StepKind::kNegate
                           ? "negate"
                           : "halve 2^" + std::to_string(s.k);
      os << std::setw(4) << ++i << "  " << std::left << std::setw(10) << op
         << std::right << std::setw(11) << s.b_before << " -> "
         << std::setw(8) << s.b_after << "  " << s.out_after << '\n';
    }
  }
  os << "iterations " << report.iterations << '\n';
  os << "log_2(" << report.b.value() << ") = " << report.result.value()
     << " (mod " << (p - 1) << ")\n";
  return os.str();
}

}  // namespace dlog2
