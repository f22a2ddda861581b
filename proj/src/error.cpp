#include "qvf/error.hpp"

namespace qvf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::AffineField: return "AffineField";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::InconsistentTriple: return "InconsistentTriple";
    case ErrorKind::NoDistinctTwin: return "NoDistinctTwin";
    case ErrorKind::DegenerateSystem: return "DegenerateSystem";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::NotSingularTriple: return "NotSingularTriple";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::BranchSingularity: return "BranchSingularity";
    case ErrorKind::DicriticalInfinity: return "DicriticalInfinity";
    case ErrorKind::MultipleDirection: return "MultipleDirection";
    case ErrorKind::ResonantDirection: return "ResonantDirection";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

}  // namespace qvf
