#include "avoidance/partition.hpp"

#include <exception>
#include <stdexcept>

namespace avoidance {

namespace {

PartitionLabel label_for(const ErrorEngine& engine, std::int64_t n, bool swapped) {
    bool negative = engine.sign(Int(n)).sign == Sign::Negative;
    // A iff E(n) < 0 under the normalized alpha, flipped by the duality swap
    return (negative != swapped) ? PartitionLabel::A : PartitionLabel::B;
}

PartitionPrefix make_prefix(const CFSpec& cf, std::int64_t n_max, int depth_cap,
                            bool parallel) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    auto norm = normalize_to_unit_interval(cf);
    ErrorEngine engine(norm.cf, depth_cap);

    PartitionPrefix out;
    out.cf = norm.cf;
    out.swapped = norm.swapped;
    out.n_max = n_max;
    out.labels.resize(static_cast<std::size_t>(n_max));

    if (!parallel) {
        for (std::int64_t n = 1; n <= n_max; ++n)
            out.labels[static_cast<std::size_t>(n - 1)] = label_for(engine, n, norm.swapped);
        return out;
    }

    // Exceptions may not escape the parallel region; keep the one thrown for
    // the smallest n so parallel failures match the serial ones.
    std::exception_ptr error;
    std::int64_t error_n = n_max + 1;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t n = 1; n <= n_max; ++n) {
        try {
            out.labels[static_cast<std::size_t>(n - 1)] = label_for(engine, n, norm.swapped);
        } catch (...) {
#pragma omp critical(avoidance_partition_error)
            if (n < error_n) {
                error_n = n;
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace

PartitionPrefix build_partition(const CFSpec& cf, std::int64_t n_max, int depth_cap) {
    return make_prefix(cf, n_max, depth_cap, true);
}

PartitionPrefix build_partition_serial(const CFSpec& cf, std::int64_t n_max, int depth_cap) {
    return make_prefix(cf, n_max, depth_cap, false);
}

}  // namespace avoidance
