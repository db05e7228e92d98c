#ifndef WALKMAT_ERROR_HPP
#define WALKMAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace walkmat {

enum class Errc {
  Singular,
  NonInteger,
  DimensionMismatch,
  LoopEdge,
  DuplicateEdge,
  IndexOutOfRange,
  MalformedHeader,
  TruncatedBody,
  TrailingGarbage,
  MalformedInput,
  EmptySet,
  NotDisjoint,
  RootsNotSeparated,
  CandidateNotGraph,
  MissingEdgeCount,
  NegativeDiscriminant,
  InvalidWalkMatrix,
  OrderMismatch,
  TheoremViolation,
  TooLarge,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Singular: return "Singular";
    case Errc::NonInteger: return "NonInteger";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedBody: return "TruncatedBody";
    case Errc::TrailingGarbage: return "TrailingGarbage";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::RootsNotSeparated: return "RootsNotSeparated";
    case Errc::CandidateNotGraph: return "CandidateNotGraph";
    case Errc::MissingEdgeCount: return "MissingEdgeCount";
    case Errc::NegativeDiscriminant: return "NegativeDiscriminant";
    case Errc::InvalidWalkMatrix: return "InvalidWalkMatrix";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace walkmat

#endif  // WALKMAT_ERROR_HPP
