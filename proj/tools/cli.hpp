#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace skewtab::cli {

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 0 success, 2 validation error, 3 resource-guard refusal.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 12 significant digits, C locale.
std::string format_real(double x);
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

}  // namespace skewtab::cli
