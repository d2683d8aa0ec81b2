#include "mergesplit/error.hpp"

namespace mergesplit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::overflow: return "Overflow";
    case Errc::empty_block: return "EmptyBlock";
    case Errc::overlap: return "Overlap";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::too_many_players: return "TooManyPlayers";
    case Errc::wrong_basis: return "WrongBasis";
    case Errc::support_mismatch: return "SupportMismatch";
    case Errc::inadmissible_order: return "InadmissibleOrder";
    case Errc::invalid_game: return "InvalidGame";
    case Errc::epsilon_too_large: return "EpsilonTooLarge";
    case Errc::component_not_superadditive: return "ComponentNotSuperadditive";
    case Errc::block_mismatch: return "BlockMismatch";
    case Errc::invalid_move: return "InvalidMove";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::multiple_stable: return "MultipleStable";
  }
  return "Unknown";
}

}  // namespace mergesplit
