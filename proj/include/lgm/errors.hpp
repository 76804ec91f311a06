#pragma once

#include <stdexcept>
#include <string>

namespace lgm {

// Exit code contract shared by the library error taxonomy and the CLI:
//   2  invalid input (parse errors, unknown models, degenerate geometry)
//   3  configured cap exceeded
//   4  polar dual requested but the origin is not strictly interior
//   5  verification failure (reported by the CLI, never thrown)
//   6  structurally unsupported configuration
class Error : public std::runtime_error {
 public:
  Error(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(2, w) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error(2, w) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& w) : Error(3, w) {}
};

struct OriginNotInterior : Error {
  explicit OriginNotInterior(const std::string& w) : Error(4, w) {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& w) : Error(6, w) {}
};

}  // namespace lgm
