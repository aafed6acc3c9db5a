#pragma once

#include <string>
#include <string_view>

#include "csm/interp.hpp"
#include "csm/parser.hpp"

namespace csm {

/// Reads a TC sequence file: one `NAME t=<nat> [delta=<nat>]` per line,
/// `#` comments, blank lines ignored, file order is dispatch order.
/// Throws ParseError.
TcSequence parse_sequence(std::string_view text, const std::string& file = "<input>");

/// One line per TC, in the same format.
std::string print_sequence(const TcSequence& seq);

std::string to_string(const TimedTelecommand& tc);

}  // namespace csm
