#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bruhat/kgb.hpp"

namespace bruhat::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in KGB fixtures by name, in listing order.
std::vector<std::pair<std::string, KgbGraph>> builtin_fixtures();

}  // namespace bruhat::cli
