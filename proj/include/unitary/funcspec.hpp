#pragma once

// Text specs for multiplicative functions, e.g. "box(id,one)", "chi:4:1",
// "times(cosa@2.5,inv(ind:12))".

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "unitary/mfunc.hpp"

namespace unitary {

/// Grammar:
///   spec  := call | atom
///   call  := ("box" | "times") "(" spec ("," spec)* ")"
///          | ("inv" | "conj" | "re" | "im") "(" spec ")"
///   atom  := one | delta1 | id | sigma-hat | phi | two-omega | neg1-omega | inv-rad
///          | cosa@Y | sina@Y | niy@Y | omega-pow@C
///          | chi:K:J | q:K:J@Y | ind:S | smooth:P.P.. | rough:P.P..
///          | rand@SEED | crand@SEED | gauss@SEED
/// Throws std::invalid_argument with the offending position on bad input.
MultiplicativeFunction parse_function(std::string_view spec);

/// One line per accepted form, for help text.
std::vector<std::string> function_spec_help();

/// "2.3.5" or "2,3,5" -> {2, 3, 5}; every entry must be prime.
std::set<std::uint64_t> parse_prime_set(std::string_view text);

}  // namespace unitary
