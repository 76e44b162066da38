#pragma once

#include <cstddef>
#include <string_view>

#include "cosets/group.hpp"

namespace cosets {

/// Sym(n) = <(1,2), (1,2,...,n)>.
GeneratedGroup symmetric_group(std::size_t n);

/// Alt(n) = <(1,2,3), n-cycle> for odd n, <(1,2,3), (2,...,n)> for even n.
GeneratedGroup alternating_group(std::size_t n);

/// C_n acting regularly on n points.
GeneratedGroup cyclic_group(std::size_t n);

/// Group from inline generator text such as "(1,2),(1,2,3)".
GeneratedGroup group_from_text(std::string_view generators, std::size_t degree);

/// The n-cycle (1,2,...,n) on `degree` points.
Permutation long_cycle(std::size_t n, std::size_t degree);

}  // namespace cosets
