#include "freediv_cli/report.hpp"

#include <iomanip>
#include <sstream>

#include "freediv/error.hpp"

namespace freediv::cli {

using nlohmann::json;

int Report::exitCode() const {
  bool budget = false;
  for (const auto& c : commands) {
    if (c.status == "fail" || c.status == "error") return int(ExitCode::MathFailure);
    if (c.status == "budget") budget = true;
  }
  return int(budget ? ExitCode::Budget : ExitCode::Pass);
}

void to_json(json& j, const CommandResult& r) {
  j = json{{"command", r.command}, {"statement", r.statement}, {"line", r.line},
           {"status", r.status},   {"message", r.message},     {"seconds", r.seconds},
           {"spairs", r.spairs},   {"reductions", r.reductions}, {"value", r.value}};
}

void from_json(const json& j, CommandResult& r) {
  j.at("command").get_to(r.command);
  j.at("statement").get_to(r.statement);
  j.at("line").get_to(r.line);
  j.at("status").get_to(r.status);
  j.at("message").get_to(r.message);
  j.at("seconds").get_to(r.seconds);
  r.spairs = j.value("spairs", 0L);
  r.reductions = j.value("reductions", 0L);
  r.value = j.value("value", json());
}

void to_json(json& j, const Report& r) {
  j = json{{"schema", "freediv-report"},
           {"version", r.version},
           {"seed", r.seed},
           {"seconds", r.seconds},
           {"exit_code", r.exitCode()},
           {"commands", r.commands}};
}

void from_json(const json& j, Report& r) {
  if (j.value("schema", std::string()) != "freediv-report") throw Error("not a freediv report");
  j.at("version").get_to(r.version);
  if (r.version != kSchemaVersion) throw Error("unsupported report version " + std::to_string(r.version));
  r.seed = j.value("seed", std::uint64_t(1));
  r.seconds = j.value("seconds", 0.0);
  j.at("commands").get_to(r.commands);
}

json poly_json(const Poly& p) { return json{{"vars", p.ring()->vars()}, {"expr", p.str()}}; }

json field_json(const VectorField& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs) coeffs.push_back(c.str());
  return json{{"vars", v.ring->vars()}, {"coeffs", coeffs}};
}

json module_json(const ModulePresentation& M) {
  json cols = json::array();
  for (const auto& col : M.columns()) {
    json c = json::array();
    for (const auto& e : col) c.push_back(e.str());
    cols.push_back(c);
  }
  return json{{"vars", M.ring()->vars()}, {"rank", M.rank()}, {"columns", cols}};
}

json certificate_json(const FreeDivisorCertificate& c) {
  json basis = json::array();
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    json f = field_json(c.basis[i]);
    f["provenance"] = i < c.provenance.size() ? provenance_name(c.provenance[i]) : "direct";
    basis.push_back(f);
  }
  return json{{"basis", basis},
              {"determinant", poly_json(c.determinant)},
              {"unit_factor", rational_str(c.unitFactor)},
              {"divisor", poly_json(c.divisorEquation)},
              {"global_only", c.globalOnly},
              {"verified", c.verify()}};
}

json pipeline_json(const PipelineReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back(json{{"name", h.name}, {"status", status_name(h.status)}, {"evidence", h.evidence}});
  json j{{"construction", r.construction},
         {"success", r.success()},
         {"hypotheses", hyps},
         {"notes", r.notes},
         {"budget_exceeded", r.budgetExceeded},
         {"lifts", r.lifts.size()}};
  if (r.failure) j["failure"] = *r.failure;
  if (r.divisor) j["divisor"] = poly_json(*r.divisor);
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  if (!r.variants.empty()) {
    json v = json::array();
    for (const auto& x : r.variants) v.push_back(pipeline_json(x));
    j["variants"] = v;
  }
  return j;
}

namespace {

void text_pipeline(std::ostringstream& os, const json& p, const std::string& indent) {
  os << indent << "construction: " << p.value("construction", "") << "\n";
  for (const auto& h : p.at("hypotheses"))
    os << indent << "  [" << h.at("status").get<std::string>() << "] " << h.at("name").get<std::string>()
       << (h.at("evidence").get<std::string>().empty() ? "" : ": " + h.at("evidence").get<std::string>()) << "\n";
  if (p.contains("divisor")) os << indent << "divisor: " << p["divisor"]["expr"].get<std::string>() << "\n";
  if (p.contains("certificate")) {
    const auto& c = p["certificate"];
    os << indent << "certificate: det = " << c["unit_factor"].get<std::string>() << " * divisor"
       << (c["global_only"].get<bool>() ? " (global, not germ-certified)" : "") << "\n";
    for (const auto& f : c["basis"]) {
      os << indent << "  " << f["provenance"].get<std::string>() << ":";
      const auto& vars = f["vars"];
      bool first = true;
      for (std::size_t i = 0; i < f["coeffs"].size(); ++i) {
        std::string e = f["coeffs"][i];
        if (e == "0") continue;
        os << (first ? " " : " + ") << "(" << e << ")*d/d" << vars[i].get<std::string>();
        first = false;
      }
      if (first) os << " 0";
      os << "\n";
    }
  }
  for (const auto& n : p.at("notes")) os << indent << "note: " << n.get<std::string>() << "\n";
  if (p.contains("failure")) os << indent << "failure: " << p["failure"].get<std::string>() << "\n";
  if (p.contains("variants"))
    for (const auto& v : p["variants"]) {
      os << indent << "variant:\n";
      text_pipeline(os, v, indent + "  ");
    }
}

void text_module(std::ostringstream& os, const json& m, const std::string& indent) {
  const auto& vars = m["vars"];
  for (const auto& col : m["columns"]) {
    os << indent;
    bool first = true;
    for (std::size_t i = 0; i < col.size(); ++i) {
      std::string e = col[i];
      if (e == "0") continue;
      os << (first ? "" : " + ") << "(" << e << ")*d/d" << vars[i].get<std::string>();
      first = false;
    }
    os << (first ? "0" : "") << "\n";
  }
}

}  // namespace

std::string text_report(const Report& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  for (const auto& c : r.commands) {
    std::string status = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : c.status == "budget" ? "BUDGET" : "ERROR";
    os << "line " << c.line << ": " << c.statement << "\n  " << status << " (" << c.seconds << " s, " << c.spairs
       << " s-pairs)";
    if (!c.message.empty()) os << ": " << c.message;
    os << "\n";
    const json& v = c.value;
    if (v.is_object()) {
      if (v.contains("pipeline")) text_pipeline(os, v["pipeline"], "  ");
      if (v.contains("module")) text_module(os, v["module"], "    ");
      if (v.contains("certificate")) {
        json p{{"construction", "saito"}, {"hypotheses", json::array()}, {"notes", v.value("notices", json::array())},
               {"certificate", v["certificate"]}};
        text_pipeline(os, p, "  ");
      }
      if (v.contains("invariants"))
        for (const auto& p : v["invariants"]) os << "    " << p["expr"].get<std::string>() << "\n";
    }
  }
  os << "total " << r.seconds << " s, exit code " << r.exitCode() << "\n";
  return os.str();
}

}  // namespace freediv::cli
