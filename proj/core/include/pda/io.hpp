#pragma once

#include <iosfwd>
#include <string>

#include "pda/pda.hpp"

namespace pda {

// Text format: first payload line "K F Z S", then F lines of K tokens, each
// "*" or a decimal integer. Blank lines and lines whose first non-space
// character is '#' are skipped. The declared Z and S are kept as-is; run
// validate() to judge them. Throws ParseError with 1-based line and token
// positions.
Pda read_pda(std::istream& in, const std::string& source = "<stream>");
Pda read_pda_file(const std::string& path);

// Canonical form: "K F Z S\n" then F rows of space-separated tokens. Writing
// then reading is byte-exact for arrays in this form.
std::string to_text(const Pda& p);
void write_pda(std::ostream& out, const Pda& p);
void write_pda_file(const std::string& path, const Pda& p);

}  // namespace pda
