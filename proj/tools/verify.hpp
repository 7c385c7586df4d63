#pragma once

#include <string>

namespace sqtcli {

/// Runs a verification suite ("all", "rotation", "yanagawa" or "solver")
/// over the standard-class complexes and balanced triplets up to max_n.
/// Returns 0 when every check holds, 1 after reporting the first violation.
int run_verify(const std::string& suite, int max_n, int threads);

}  // namespace sqtcli
