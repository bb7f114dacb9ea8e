#pragma once

#include <string>
#include <vector>

namespace pkahler::cli {

/// Dispatches a full command line (excluding argv[0]). Exit code 0 for
/// definite verdicts, 2 for honest indeterminacy, 1 for usage errors.
/// Machine-readable JSON goes to `out`, human prose to `err`.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace pkahler::cli
