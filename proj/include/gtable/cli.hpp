#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtable::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // fixture mismatch or failing property
inline constexpr int kExitInput = 2;     // usage or input error

// args excludes the program name. The report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace gtable::cli
