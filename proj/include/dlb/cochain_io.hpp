// JSON serialization of cochains.
//
// Format: { "degree": int, "n": int, "components": [ array, ... ] } where each
// array holds (2n+1)^2 entries [re, im] in row-major order (s fastest,
// offset (k+n)*(2n+1) + (s+n)).
#pragma once

#include <iosfwd>
#include <string>

#include "dlb/cochain.hpp"

namespace dlb {

void save_cochain(const Cochain& form, std::ostream& out);
void save_cochain(const Cochain& form, const std::string& path);

Cochain load_cochain(std::istream& in);
Cochain load_cochain(const std::string& path);

}  // namespace dlb
