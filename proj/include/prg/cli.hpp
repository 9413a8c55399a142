// Command-line surface. run_cli is the whole program (main() is a thin
// wrapper) so tests can drive every subcommand in-process.
// Exit codes: 0 ok, 2 parse/validation error, 3 verification mismatch,
// 1 anything unexpected.
#ifndef PRG_CLI_HPP
#define PRG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace prg {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prg

#endif
