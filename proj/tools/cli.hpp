#ifndef PERMCT_CLI_HPP
#define PERMCT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace permct::cli
{

enum ExitCode : int
{
  kYes = 0,
  kNo = 1,
  kBudget = 2,
  kUsage = 64,
  kMalformedInput = 65
};

/// Runs one command; args excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err);

} // namespace permct::cli

#endif // PERMCT_CLI_HPP
