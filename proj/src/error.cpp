#include "srings/error.hpp"

namespace srings {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidFactor: return "invalid-factor";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kSize: return "size";
    case ErrorKind::kContainment: return "containment";
    case ErrorKind::kArgument: return "argument";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kNotAPartition: return "not-a-partition";
    case ErrorKind::kIdentityNotSingleton: return "identity-not-singleton-class";
    case ErrorKind::kNotInverseClosed: return "not-inverse-closed";
    case ErrorKind::kNotModuleClosed: return "not-module-closed";
    case ErrorKind::kNotASection: return "not-a-section";
    case ErrorKind::kNotAnIsomorphism: return "not-an-isomorphism";
    case ErrorKind::kAutLifting: return "aut-lifting";
    case ErrorKind::kAdmissibility: return "admissibility";
    case ErrorKind::kClassificationFailure: return "classification-failure";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace srings
