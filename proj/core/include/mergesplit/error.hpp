#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mergesplit {

enum class Errc {
  invalid_argument,
  parse_error,
  overflow,
  // partition algebra
  empty_block,
  overlap,
  out_of_range,
  not_a_partition,
  too_many_players,
  // orders and relations
  wrong_basis,
  support_mismatch,
  inadmissible_order,
  // games
  invalid_game,
  epsilon_too_large,
  component_not_superadditive,
  block_mismatch,
  // engine
  invalid_move,
  cap_exceeded,
  multiple_stable,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that front-ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace mergesplit
