// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 malformed input or a violated precondition.

#ifndef NOVA_COMMANDS_HPP
#define NOVA_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nova/io.hpp"

namespace nova {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable listing of a definition's nonzero entries.
std::string describe(const Definition& d);

/// Definitions named by a file path or fixture name, flattened.
std::vector<Definition> load_inputs(const std::vector<std::string>& inputs);

}  // namespace nova

#endif  // NOVA_COMMANDS_HPP
