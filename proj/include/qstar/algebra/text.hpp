#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/algebra/polynomial.hpp"

namespace qstar::algebra {

/// Parses the plain-text polynomial grammar:
///
///   poly   := [sign] term (sign term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | var ['^' integer]
///   var    := 'x[' i ',' j ']' | 'y[' i ']'
///
/// x[j,i] with j > i reads as -x[i,j]; x[i,i] is rejected.
Polynomial parse_polynomial(std::string_view text, int n);

/// One polynomial per non-empty line; '#' starts a comment.
std::vector<Polynomial> parse_ideal(std::string_view text, int n);

std::string format_ideal(std::span<const Polynomial> generators, std::string_view header = {});

}  // namespace qstar::algebra
