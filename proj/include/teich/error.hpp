#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace teich {

enum class ErrorKind {
  structural,      // dangling or duplicate references in an input value
  precondition,    // operation called outside its domain
  not_invertible,  // ring element without a monomial-times-unit structure
  pole,            // substitution q_e = 0 into a negative power of q_e
  degenerate,      // repeated root / parabolic element at q = 0
  unsupported,     // valid request the library deliberately does not evaluate
  numeric,         // integrator or convergence failure
  not_composable,  // groupoid word or edge path that does not chain
  bound_exceeded,  // size guard on exhaustive searches
  parse,           // malformed text or JSON input
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Position of the offending item for sequence inputs (paths, words).
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace teich
