#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lhcert {

enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
  unsigned prec = 256;
  unsigned n_max = 64;
  double tol = 1e-14;
  OutputFormat format = OutputFormat::Table;
  std::size_t quad_node_cap = 4096;
  unsigned jobs = 1;
};

// Exit codes: 0 success, 1 usage or input error, 2 Inconclusive /
// NoWitnessFound. args excludes the program name.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lhcert
