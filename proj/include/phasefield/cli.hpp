#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phasefield {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitRuntimeAbort = 2,
    kExitNonConvergence = 3,
};

/// Entry point of the `phasefield` tool. args excludes the program name.
///
///   run <config>
///   fit <timeseries.csv> [--fraction F]
///   oracle neumann --stefan St
///   scan-velocity <config> --vmin V0 --vmax V1 --nv N
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phasefield
