#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. Carries the byte offset and the tokens that
/// would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& detail = {})
      : Error(format(position, expected, detail)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t position, const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string msg = "syntax error at position " + std::to_string(position);
    if (!detail.empty()) msg += ": " + detail;
    if (!expected.empty()) {
      msg += "; expected one of:";
      for (const auto& e : expected) msg += " " + e;
    }
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class IllegalGenerator : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Degree of the zero element was requested.
class ZeroElement : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class RankDeficientInput : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// A Gram matrix of the Frobenius form was singular. The form is
/// nondegenerate, so this always indicates a defect in the kernel.
class SingularGram : public Error {
 public:
  using Error::Error;
};

class NotDegreeZero : public Error {
 public:
  using Error::Error;
};

class NotInSubalgebra : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class UnsupportedN : public Error {
 public:
  using Error::Error;
};

}  // namespace weylkit
