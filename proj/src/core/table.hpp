#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skewtab {

// One row per partition of n in reverse-lexicographic order: the partition,
// f^mu, and K(mu,(m,1^{n-m})) for each requested m (0 when the first row is
// shorter than m). format is "csv" or "json". Output is deterministic:
// fixed ordering, no timestamps.
std::string render_table(unsigned long n, std::vector<unsigned> ms, std::string_view format);

}  // namespace skewtab
