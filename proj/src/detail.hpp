#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morbit/term.hpp"

/* Internal helpers shared between term.cpp and element.cpp.  Not installed. */

namespace morbit {

/* Stable sort permutation over serialization keys; the single source of
 * truth for Prod factor order, so terms and elements permute identically. */
std::vector<std::size_t> sorted_perm(const std::vector<std::string>& keys);

/* Levelwise q on terms without the final normalization pass. */
TermPtr graph_image_raw(const Term& t);

}  // namespace morbit
