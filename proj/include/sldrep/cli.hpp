#pragma once

// Entry point of the sldrep command-line tool:
//
//   sldrep check FILE [--all-sw-paths]
//   sldrep search FILE [--group G] [--dedup MODE] [--all-sw-paths]
//                      [--allow-any-hopf] [--threads N] [--cache-dir DIR]
//   sldrep obstruct [--b2 N] [--summands a,b,...]
//   sldrep bundle --b1 B --b2 N --c2 K
//   sldrep canon FILE
//
// The JSON report goes to `out`, one JSON diagnostic per line to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace sldrep::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sldrep::cli
