#include <chrono>

#include "freediv/error.hpp"
#include "freediv_cli/report.hpp"

namespace freediv::cli {

using nlohmann::json;

namespace {

struct Outcome {
  bool verdict = true;
  std::string result;
  std::string message;
  json value = json::object();
};

Outcome pipeline_outcome(const PipelineReport& r) {
  Outcome o;
  o.verdict = r.success();
  o.result = r.success() ? "free" : "not-free";
  if (r.failure) o.message = *r.failure;
  o.value["pipeline"] = pipeline_json(r);
  if (r.budgetExceeded) throw BudgetExceeded(r.failure.value_or("budget exceeded"));
  return o;
}

Outcome execute(const Session& s, const Check& c, const CheckOptions& opts) {
  const EngineOptions& eng = opts.engine;
  Outcome o;
  switch (c.kind) {
    case CheckKind::Derlog: {
      ModulePresentation M = derlog_hypersurface(s.polys.at(c.polyName), eng);
      o.result = std::to_string(M.numColumns());
      o.value["module"] = module_json(M);
      o.value["generators"] = M.numColumns();
      return o;
    }
    case CheckKind::Free: {
      FreenessResult r = is_free_saito(s.polys.at(c.polyName), opts);
      o.verdict = r.free();
      o.result = r.free() ? "free" : "not-free";
      o.value["free"] = r.free();
      o.value["notices"] = r.notices;
      if (r.certificate) o.value["certificate"] = certificate_json(*r.certificate);
      if (r.notFree) {
        o.message = r.notFree->reason;
        o.value["not_free"] = json{{"generators", r.notFree->generatorCount},
                                   {"arity", r.notFree->arity},
                                   {"reason", r.notFree->reason}};
      }
      return o;
    }
    case CheckKind::Pullback:
      return pipeline_outcome(pullback_main(s.maps.at(c.mapName), s.polys.at(c.polyName), c.mode, opts));
    case CheckKind::EulerLift:
      return pipeline_outcome(euler_variant(s.maps.at(c.mapName), s.polys.at(c.polyName), c.ints, opts));
    case CheckKind::Ffstar: {
      const Poly& h = s.polys.at(c.polyName);
      if (c.canonical) return pipeline_outcome(ffstar_canonical(h, opts));
      if (c.vars.empty()) return pipeline_outcome(ffstar(h, c.polys, opts));
      return pipeline_outcome(ffstar(h, c.polys, c.vars, opts));
    }
    case CheckKind::Castling:
      return pipeline_outcome(castling(s.polys.at(c.polyName), c.ints.at(0), opts));
    case CheckKind::Liftable: {
      const PolyMap& phi = s.maps.at(c.mapName);
      ModulePresentation L = liftable_module(phi, eng);
      o.value["module"] = module_json(L);
      o.value["generators"] = L.numColumns();
      o.result = std::to_string(L.numColumns());
      if (!c.polyName.empty()) {
        ModulePresentation D = derlog_hypersurface(s.polys.at(c.polyName), eng);
        bool eq = module_equal(L, D, eng);
        o.verdict = eq;
        o.result = eq ? "equal" : "different";
        o.value["equals_derlog"] = eq;
        if (!eq) o.message = "liftable module differs from Der(-log " + c.polyName + ")";
      }
      return o;
    }
    case CheckKind::T1: {
      const PolyMap& phi = s.maps.at(c.mapName);
      ModulePresentation T = t1_presentation(phi);
      int dim = module_dim(T, eng);
      bool cm = T.isGraded() && cm_codim2(T, eng);
      o.verdict = cm;
      o.result = cm ? "cm" : "not-cm";
      if (!cm) o.message = "T1 not Cohen-Macaulay of codimension 2";
      o.value["cm_codim2"] = cm;
      o.value["dim"] = dim;
      o.value["presentation"] = module_json(T);
      return o;
    }
    case CheckKind::Invariants: {
      const LinearRep& rep = s.reps.at(c.repName);
      std::vector<Poly> inv = invariants_of_degree(rep, c.ints.at(0));
      o.verdict = verify_invariants(rep, inv);
      o.result = std::to_string(inv.size());
      json arr = json::array();
      for (const auto& p : inv) arr.push_back(poly_json(p));
      o.value["invariants"] = arr;
      o.value["count"] = inv.size();
      return o;
    }
    case CheckKind::Stabilizer: {
      StabilizerResult r = stabilizer_dim(s.reps.at(c.repName), s.options.seed);
      o.result = std::to_string(r.dim);
      o.value["dim"] = r.dim;
      o.value["seed"] = r.seed;
      return o;
    }
  }
  return o;
}

}  // namespace

Report run(const Session& session) {
  using clock = std::chrono::steady_clock;
  Report report;
  report.seed = session.options.seed;
  auto start = clock::now();
  auto deadline = clock::time_point::max();
  if (session.options.timeoutSeconds > 0)
    deadline = start + std::chrono::duration_cast<clock::duration>(
                           std::chrono::duration<double>(session.options.timeoutSeconds));
  for (const Check& c : session.checks) {
    CommandResult r;
    r.command = check_name(c.kind);
    r.statement = c.text;
    r.line = c.line;
    EngineStats stats;
    CheckOptions opts;
    opts.allowNonhomogeneous = session.options.allowNonhomogeneous;
    opts.engine.budget = session.options.budget;
    opts.engine.deadline = deadline;
    opts.engine.stats = &stats;
    auto t0 = clock::now();
    try {
      Outcome o = execute(session, c, opts);
      r.value = o.value;
      r.value["result"] = o.result;
      r.message = o.message;
      bool ok = o.verdict;
      if (c.expect) {
        ok = o.result == *c.expect;
        r.value["expected"] = *c.expect;
        if (!ok) r.message = "expected " + *c.expect + ", got " + o.result + (o.message.empty() ? "" : "; " + o.message);
        else r.message.clear();
      }
      r.status = ok ? "pass" : "fail";
    } catch (const BudgetExceeded& e) {
      r.status = "budget";
      r.message = e.what();
    } catch (const std::exception& e) {
      r.status = "error";
      r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    r.spairs = stats.spairs;
    r.reductions = stats.reductions;
    report.commands.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

}  // namespace freediv::cli
