#include "nchopf/error.hpp"

namespace nchopf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingImage: return "MissingImage";
    case ErrorKind::MissingRole: return "MissingRole";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::ZeroRelation: return "ZeroRelation";
    case ErrorKind::DegreeIncreasing: return "DegreeIncreasing";
    case ErrorKind::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::NotConfluent: return "NotConfluent";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InconsistentXi: return "InconsistentXi";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::WrongXiMode: return "WrongXiMode";
    case ErrorKind::ZeroPlanck: return "ZeroPlanck";
    case ErrorKind::BasisExpressFailure: return "BasisExpressFailure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace nchopf
