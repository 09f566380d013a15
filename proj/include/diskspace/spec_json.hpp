#pragma once

#include <string>

#include "diskspace/disk_function.hpp"
#include "diskspace/majorant.hpp"

namespace diskspace {

// Function specs accepted by the CLI:
//   {"family":"power","coeffs":[0,1]}            real or [re,im] entries
//   {"family":"lacunary","terms":14}
//   {"family":"harmonic_pair","h":[...],"g":[...]}
//   {"family":"yukawa","lambda":1.0}
//   "identity"                                   shorthand for f(z) = z
// Malformed input raises MalformedSpec.
DiskFunction parse_function_spec(const std::string& text);

// Majorant specs:
//   "identity" | {"kind":"identity"}
//   {"kind":"power","s":0.5}        or "power:0.5"
//   {"kind":"logsmoothed"}          or "logsmoothed"
//   {"kind":"table","knots":[[t,w],...]}
Majorant parse_majorant_spec(const std::string& text);

// FNV-1a hash of a canonical configuration string; stamped on every CSV row.
std::string config_hash(const std::string& canonical);

} // namespace diskspace
