#pragma once

#include <iosfwd>

namespace tsallis::cli {

// Entry point of tsallis-verify. Verbs: verify, eval, gen, replay.
// Returns the process exit code: 0 pass, 1 inequality violation,
// 2 configuration / input / precondition error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsallis::cli
