#pragma once

namespace hlx {

// Entry point behind the hlx binary; returns the process exit code.
int cli_main(int argc, const char* const* argv);

} // namespace hlx
