#pragma once

#include <string>
#include <vector>

#include "qreset/renewal.hpp"

namespace qreset::cli {

// Schedule mini-language:
//   const:<r>            constant probability
//   ramp:<slope>:<cap>   r(t) = min{cap, slope * (t-1)}
//   cosine               r(t) = [1 - cos(t-1)] / 2
//   file:<path>          rates from a schedule text file (mode + horizon header)
//   survival-file:<path> generalized schedule derived from a survival sequence
// `horizon` sizes the generative kinds; file kinds carry their own.
ResetSchedule parse_schedule(const std::string& spec, int horizon);

// Entry point behind the binary: args exclude the program name.
// Exit code 0 on success, 2 on usage/input errors, 1 on numerical failure.
int run(std::vector<std::string> args);

}  // namespace qreset::cli
