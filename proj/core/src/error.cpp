#include "sgforge/error.hpp"

namespace sgforge {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotEffective: return "NotEffective";
    case Errc::NotASemigroup: return "NotASemigroup";
    case Errc::MultiplicityOne: return "MultiplicityOne";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidKunz: return "InvalidKunz";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NegativeIndex: return "NegativeIndex";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::IncompleteTable: return "IncompleteTable";
    case Errc::IncompleteCensus: return "IncompleteCensus";
    case Errc::AlreadyOrdinary: return "AlreadyOrdinary";
  }
  return "Unknown";
}

}  // namespace sgforge
