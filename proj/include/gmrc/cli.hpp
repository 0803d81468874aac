#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gmrc/catalog.hpp"

namespace gmrc {

// Dispatches one command line (without the program name). Returns the process
// exit status: 0 success, 1 verification failure, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

// One published-code verification; true on PASS. The report line is appended
// either way.
bool verify_catalog_entry(const CatalogEntry& entry, std::string& line);
bool verify_example16(std::string& line);

}  // namespace gmrc
