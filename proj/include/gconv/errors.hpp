#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gconv {

// Caller violated a documented precondition (bad flag, bad vertex, arity).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input text. line() is 1-based; 0 when no line applies.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact solver was asked to run beyond its configured size cap.
class infeasible_error : public std::runtime_error {
 public:
  infeasible_error(std::string solver, std::size_t cap, std::size_t requested)
      : std::runtime_error(solver + ": n=" + std::to_string(requested) +
                           " exceeds the exact-solver cap of " + std::to_string(cap)),
        cap_(cap),
        requested_(requested) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::size_t cap_;
  std::size_t requested_;
};

}  // namespace gconv
