#ifndef UAREP_CLI_HPP_
#define UAREP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace uarep {

// Runs one command and writes the report to `out`. Returns 0 on success,
// 1 on domain errors (the report is the error name and payload), 2 on
// usage or parse errors. Identical inputs produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace uarep

#endif  // UAREP_CLI_HPP_
