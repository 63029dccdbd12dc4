// Executable correspondence checks between the semantics and the
// translation pipelines, run over given or generated programs.

#ifndef DLBRIDGE_VERIFY_H_
#define DLBRIDGE_VERIFY_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "dlbridge/defaults.h"
#include "dlbridge/generator.h"
#include "dlbridge/semantics.h"

namespace dlbridge {

struct CheckInfo {
  std::string id;
  std::string semantics;    // table column
  std::string translation;  // table row
  std::string precondition;
  std::string statement;
};

// Frozen check ids with the property each one decides.
const std::vector<CheckInfo>& check_table();
const CheckInfo* find_check(const std::string& id);

enum class Fault { kNone, kTauDropJustifications };

struct VerifyOptions {
  EvalOptions eval;
  ExtensionOptions extensions;
  EnumerateOptions enumerate;
  Fault fault = Fault::kNone;
  bool minimise = true;
};

struct CheckOutcome {
  std::string check_id;
  std::string instance_id;
  bool pass = true;
  bool skipped = false;  // precondition unmet or resource cap hit
  std::string reason;
  // Failing program (after shrinking) with both sides of the comparison.
  std::string counterexample;
};

bool check_applies(const std::string& id, ProgramContext& ctx);
// Decides the check on one program without shrinking; detail describes a
// failure.
bool check_holds(const std::string& id, const DLProgram& p, const VerifyOptions& opts, std::string* detail = nullptr);
CheckOutcome run_check(const std::string& id, const DLProgram& p, const std::string& instance_id,
                       const VerifyOptions& opts = {});
// Draws programs until count of them meet the precondition of id.
std::vector<CheckOutcome> run_generated(const std::string& id, const GeneratorConfig& cfg, std::size_t count,
                                        const VerifyOptions& opts = {}, std::size_t max_draws = 0);
// Removes rules, then constants, while the check keeps failing.
DLProgram shrink_counterexample(const std::string& id, const DLProgram& p, const VerifyOptions& opts);

// Per-check counts followed by a semantics x translation grid.
void print_report(std::ostream& os, const std::vector<CheckOutcome>& outcomes);

}  // namespace dlbridge

#endif  // DLBRIDGE_VERIFY_H_
