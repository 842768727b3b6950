#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "freediv/construct.hpp"
#include "freediv_cli/session.hpp"

namespace freediv::cli {

inline constexpr int kSchemaVersion = 1;

enum class ExitCode { Pass = 0, MathFailure = 1, ParseError = 2, Budget = 3 };

struct CommandResult {
  std::string command;
  std::string statement;
  int line = 0;
  // pass | fail | budget | error
  std::string status;
  std::string message;
  double seconds = 0;
  long spairs = 0;
  long reductions = 0;
  nlohmann::json value;
};

struct Report {
  int version = kSchemaVersion;
  std::vector<CommandResult> commands;
  double seconds = 0;
  std::uint64_t seed = 1;
  int exitCode() const;
};

void to_json(nlohmann::json& j, const CommandResult& r);
void from_json(const nlohmann::json& j, CommandResult& r);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

nlohmann::json poly_json(const Poly& p);
nlohmann::json field_json(const VectorField& v);
nlohmann::json module_json(const ModulePresentation& M);
nlohmann::json certificate_json(const FreeDivisorCertificate& c);
nlohmann::json pipeline_json(const PipelineReport& r);

std::string text_report(const Report& r);

// Executes the checks in order.
Report run(const Session& session);

}  // namespace freediv::cli
