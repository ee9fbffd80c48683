#pragma once

#include "semitwist/instance.hpp"
#include "semitwist/report.hpp"

namespace semitwist {

/// Executes the checks requested by an instance. Check failures are report
/// entries; parse/validation/cap errors propagate as exceptions and map to
/// exit codes 2 and 3 in the CLI.
Report run_checks(const ParsedInstance& pi, const BuiltInstance& bi, const Caps& caps = {});

}  // namespace semitwist
