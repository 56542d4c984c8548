#include "qhopf/error.hpp"

namespace qhopf {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::IrrationalSquareRoot: return "IrrationalSquareRoot";
    case ErrorKind::UnresolvedConstant: return "UnresolvedConstant";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::MixedConfiguration: return "MixedConfiguration";
    case ErrorKind::StarUndefined: return "StarUndefined";
    case ErrorKind::OperandContainsPartial: return "OperandContainsPartial";
    case ErrorKind::InconsistentDerivation: return "InconsistentDerivation";
    case ErrorKind::SectorViolation: return "SectorViolation";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::NotSpecializable: return "NotSpecializable";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::StarInconsistency: return "StarInconsistency";
  }
  return "Error";
}

}  // namespace qhopf
