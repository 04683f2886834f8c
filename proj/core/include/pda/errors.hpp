#pragma once

#include <stdexcept>
#include <string>

namespace pda {

// Base class for every failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RaggedGrid : Error { using Error::Error; };
struct Empty : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct InvalidSubset : Error { using Error::Error; };
struct UnsupportedRatio : Error { using Error::Error; };
struct NonCornerPoint : Error { using Error::Error; };
struct NonConformingK : Error { using Error::Error; };
struct NotRegular : Error { using Error::Error; };
struct InvalidPda : Error { using Error::Error; };
struct NTooSmall : Error { using Error::Error; };
struct BadDemand : Error { using Error::Error; };
struct MissingSideInfo : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct SearchBudgetExceeded : Error { using Error::Error; };

// Lexical failure in a file or flag value. line and col are 1-based token
// positions; 0 means unknown (e.g. an unreadable file).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, int col, const std::string& what_arg)
      : Error(format(source, line, col, what_arg)), line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  static std::string format(const std::string& source, int line, int col,
                            const std::string& what_arg) {
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line > 0) {
      out += ":" + std::to_string(line);
      if (col > 0) out += ":" + std::to_string(col);
    }
    return out + ": " + what_arg;
  }

  int line_;
  int col_;
};

}  // namespace pda
