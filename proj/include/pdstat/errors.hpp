#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdstat {

enum class ErrorCode {
  Parse,
  Invariant,
  EssentialPoint,
  Infeasible,
  SizeLimit,
  InvalidArgument,
  Io,
};

/// Base class for every error raised by the library. The code is what the
/// C API and the CLI exit status are derived from.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what)
      : Error(ErrorCode::Invariant, what) {}
};

class EssentialPointError : public Error {
 public:
  EssentialPointError()
      : Error(ErrorCode::EssentialPoint,
              "diagram contains an essential point (death = inf)") {}
};

class InfeasibleError : public Error {
 public:
  InfeasibleError()
      : Error(ErrorCode::Infeasible,
              "every assignment has infinite total cost") {}
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(std::size_t size, std::size_t cap)
      : Error(ErrorCode::SizeLimit,
              "enumeration size " + std::to_string(size) +
                  " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::InvalidArgument, what) {}
};

}  // namespace pdstat
