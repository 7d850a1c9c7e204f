#include "dunkl/errors.hpp"

namespace dunkl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain:
      return "domain";
    case ErrorKind::range:
      return "range";
    case ErrorKind::convergence:
      return "convergence";
    case ErrorKind::consistency:
      return "consistency";
  }
  return "unknown";
}

}  // namespace dunkl
