#ifndef MAPCENSUS_CLI_HPP
#define MAPCENSUS_CLI_HPP

#include <string>
#include <vector>

#include "mapcensus/automorphism.hpp"

namespace mapcensus {

inline constexpr int kUsageExitCode = 64;

struct CliOutput {
  int exit_code = 0;
  std::string out;
  std::string err;  // error reports end with a "reason=<Token>" line
};

/// Runs one command line (without the program name).
CliOutput run_cli(const std::vector<std::string>& args);

// Automorphism list file: "automorphisms <count>", then one line of vertex
// images per automorphism.
std::vector<GraphAutomorphism> read_automorphisms(std::istream& in);
std::vector<GraphAutomorphism> load_automorphisms(const std::string& path);
void write_automorphisms(std::ostream& out, const std::vector<GraphAutomorphism>& autos);

}  // namespace mapcensus

#endif  // MAPCENSUS_CLI_HPP
