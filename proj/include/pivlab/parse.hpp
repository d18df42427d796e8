#pragma once

#include <string>
#include <vector>

#include "pivlab/families.hpp"
#include "pivlab/ratfunc.hpp"

namespace pivlab {

// Parse expressions in the variable z, e.g. "-1/z", "(z^2+1)/(z^3-3*z)",
// "2z - 1/2".  Supported: + - * / ^, parentheses, implicit multiplication,
// integer literals of any size.  Throws std::invalid_argument on bad input.
RatFunc parse_ratfunc(const std::string& text);

// Parse a nested index flag like "[]<[1]<[1,2]" into its levels.
std::vector<std::vector<unsigned>> parse_flag(const std::string& text);

// Same, as sorted Hermite index sequences ready for build_chain.
std::vector<families::HermiteSequence> parse_flag_sequences(const std::string& text);

}  // namespace pivlab
