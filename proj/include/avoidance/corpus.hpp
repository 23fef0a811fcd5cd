#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "avoidance/cf.hpp"

namespace avoidance {

/// Reproducible pseudo-random periodic specs for the verification suite:
/// prefix length <= 4, period length <= 4, quotients <= 6, a_0 in {1,2,3}.
/// Same seed, same list, on every platform (raw mt19937_64 draws; the
/// standard distributions are implementation-defined and avoided).
std::vector<CFSpec> corpus_generate(std::uint64_t seed, std::size_t count);

}  // namespace avoidance
