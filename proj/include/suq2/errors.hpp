#pragma once

#include <stdexcept>
#include <string>

namespace suq2 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// q outside the open interval (0,1) handed to a numeric routine.
class QOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Truncation too small for the algebraic degree of the input.
class CutoffTooSmall : public Error {
 public:
  using Error::Error;
};

class MarginTooSmall : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Throws QOutOfRange unless 0 < q < 1.
void require_q_in_open_unit_interval(double q);

}  // namespace suq2
