#pragma once

#include <cstdint>
#include <vector>

#include "avoidance/error_engine.hpp"

namespace avoidance {

/// A: the integer multiple of alpha nearest n lies above n (E(n) < 0).
/// B: it lies below n (E(n) > 0).
enum class PartitionLabel : std::uint8_t { A, B };

inline PartitionLabel flip(PartitionLabel l) {
    return l == PartitionLabel::A ? PartitionLabel::B : PartitionLabel::A;
}

inline char label_char(PartitionLabel l) { return l == PartitionLabel::A ? 'A' : 'B'; }

/// The two-part partition restricted to [1, n_max].  Labels always refer to
/// the caller's alpha: specs with a_0 >= 2 are normalized internally and the
/// A/B swap of the duality is applied before storing.
struct PartitionPrefix {
    CFSpec cf;     // normalized spec the signs were computed from
    bool swapped;  // whether the duality swap was applied
    std::int64_t n_max = 0;
    std::vector<PartitionLabel> labels;  // labels[n-1] for n in [1, n_max]

    PartitionLabel label(std::int64_t n) const { return labels[static_cast<std::size_t>(n - 1)]; }
};

/// OpenMP kernel; label of each n is computed independently and the result
/// is identical to the serial reference.
PartitionPrefix build_partition(const CFSpec& cf, std::int64_t n_max,
                                int depth_cap = kDefaultDepthCap);

/// Serial reference implementation kept for testing and benchmarking.
PartitionPrefix build_partition_serial(const CFSpec& cf, std::int64_t n_max,
                                       int depth_cap = kDefaultDepthCap);

}  // namespace avoidance
