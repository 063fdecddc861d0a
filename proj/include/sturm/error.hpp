#pragma once

#include <stdexcept>
#include <string>

namespace sturm {

enum class Errc {
  parse_error,
  invalid_argument,
  out_of_range,
  not_sturm,
  not_meander,
  inconsistent_window,
  bound_exceeded,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the text parser. `token_index` is the 1-based index of the
// offending token, or 0 when the input as a whole is at fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int token_index)
      : Error(Errc::parse_error, what), token_index_(token_index) {}

  int token_index() const noexcept { return token_index_; }

 private:
  int token_index_;
};

}  // namespace sturm
