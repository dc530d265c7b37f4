#pragma once

#include <iosfwd>

namespace k3sesh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitOverflow = 4;

/// Entry point for the k3sesh tool; output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3sesh::cli
