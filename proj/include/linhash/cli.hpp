#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linhash {

/// Runs one CLI invocation. Exit code 0 on success (and all claims passing),
/// 1 when any verified claim fails, 2 on usage or domain errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace linhash
