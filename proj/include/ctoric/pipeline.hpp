#pragma once

// One command on one cone: drives the pipeline and assembles the report with
// the exit status the command line tool returns.

#include <optional>
#include <stdexcept>
#include <string>

#include "ctoric/report.hpp"

namespace ctoric {

enum class Command { Validate, Normalize, Equivariant, Toric, Partial, Contact, Stabilizers, Report };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Normalize: return "normalize";
    case Command::Equivariant: return "equivariant";
    case Command::Toric: return "toric";
    case Command::Partial: return "partial";
    case Command::Contact: return "contact";
    case Command::Stabilizers: return "stabilizers";
    default: return "report";
  }
}

inline std::optional<Command> parse_command(const std::string& s) {
  for (Command c : {Command::Validate, Command::Normalize, Command::Equivariant, Command::Toric, Command::Partial,
                    Command::Contact, Command::Stabilizers, Command::Report})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::optional<unsigned> max_degree;  // defaults to 2n where an equivariant ring is printed, n otherwise
  bool rational = false;
  std::optional<std::size_t> subtorus_rank;
};

struct RunResult {
  int exit_code = kExitOk;
  ReportFile report;
};

inline RunResult run_command(Command cmd, const ConeFile& file, const RunOptions& opt) {
  const ConeSpec& cone = file.cone;
  const CoefficientMode mode =
      opt.rational || file.mode == std::optional<std::string>("rational") ? CoefficientMode::Rational : CoefficientMode::Integral;
  const bool ring_command = cmd == Command::Equivariant || cmd == Command::Partial || cmd == Command::Report;
  const unsigned max_degree = opt.max_degree.value_or(static_cast<unsigned>(ring_command ? 2 * cone.dim : cone.dim));

  RunResult out;
  ReportFile& r = out.report;
  r.input = make_input_section(cone, mode);
  r.config = {to_string(cmd), to_string(mode), max_degree, std::nullopt, {}};
  if (cmd == Command::Partial) {
    if (!opt.subtorus_rank) throw UsageError("partial requires --rank");
    if (*opt.subtorus_rank > cone.dim - 1)
      throw UsageError("subtorus rank " + std::to_string(*opt.subtorus_rank) + " exceeds " + std::to_string(cone.dim - 1));
    r.config.subtorus_rank = opt.subtorus_rank;
  }
  auto finish = [&](int code) {
    r.config.hash = configuration_hash(r);
    out.exit_code = code;
    return out;
  };
  auto fail = [&](const std::string& why) {
    r.error = why;
    return finish(kExitValidation);
  };

  std::optional<ConeAnalysis> analysis;
  try {
    analysis = analyze(cone);
  } catch (const SliceError& e) {
    if (cmd == Command::Normalize || cmd == Command::Report) {
      try {
        r.normalization = make_normalization_section(normalize(cone));
      } catch (const SliceError&) {
      }
    }
    r.validation = make_validation_section(cone, e.what());
    return fail(e.what());
  }
  const ConeAnalysis& a = *analysis;

  const bool integral_ok = mode == CoefficientMode::Rational || a.smoothness.passed();
  std::string validation_error;
  if (!a.goodness.is_good) {
    try {
      require_good(a);
    } catch (const ValidationFailure& e) {
      validation_error = e.what();
    }
  } else if (!integral_ok) {
    try {
      require_smooth(a, mode);
    } catch (const ValidationFailure& e) {
      validation_error = e.what();
    }
  }

  if (cmd != Command::Normalize) r.validation = make_validation_section(a, mode);
  if (cmd == Command::Normalize || cmd == Command::Report) {
    r.normalization = make_normalization_section(a.normalization);
    r.slice = make_slice_section(a);
  }
  if (cmd == Command::Stabilizers || cmd == Command::Report) r.stabilizers = make_stabilizers(a);

  switch (cmd) {
    case Command::Normalize:
    case Command::Stabilizers:
      return finish(kExitOk);
    case Command::Validate:
      return validation_error.empty() ? finish(kExitOk) : fail(validation_error);
    default:
      break;
  }

  try {
    if (cmd == Command::Equivariant || cmd == Command::Report)
      r.equivariant = make_equivariant_section(equivariant_cohomology(a, max_degree));
    if (cmd == Command::Partial) {
      PartialSection p;
      p.subtorus_rank = *opt.subtorus_rank;
      const std::size_t forms = a.dim() - 1 - p.subtorus_rank;
      auto lf = linear_forms(a.normalization.cone.normals, a.dim());
      for (std::size_t i = 0; i < forms; ++i) p.linear_forms.push_back(to_string(linear_polynomial(lf[i])));
      p.ranks = partial_equivariant(a, p.subtorus_rank, max_degree);
      r.partial = std::move(p);
    }
    if (cmd == Command::Toric) r.toric = make_toric_section(toric_cohomology(a, mode).ring, mode);
    if (cmd == Command::Contact || cmd == Command::Report) {
      ContactCohomologyReport c = contact_cohomology(a, mode);
      r.toric = make_toric_section(c.toric, mode);
      r.contact = make_contact_section(c);
      r.checks = make_checks(c.checks);
      for (const auto& ch : c.checks)
        if (ch.status == CheckStatus::Fail) return fail("consistency check " + ch.name + " failed: " + ch.evidence);
    }
  } catch (const ValidationFailure& e) {
    return fail(e.what());
  }
  return finish(kExitOk);
}

}  // namespace ctoric
