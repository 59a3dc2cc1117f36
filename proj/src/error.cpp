#include "teich/error.hpp"

namespace teich {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::structural: return "structural";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::not_invertible: return "not_invertible";
    case ErrorKind::pole: return "pole";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::not_composable: return "not_composable";
    case ErrorKind::bound_exceeded: return "bound_exceeded";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace teich
