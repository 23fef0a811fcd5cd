#pragma once

#include <cstdint>
#include <vector>

#include "avoidance/partition.hpp"

namespace avoidance {

enum class AvoidedKind { ConvergentNumerator, DoubleOfConvergent, IntermediateNumerator };

/// One element of the avoided set with its structural witness.
/// ConvergentNumerator: value = p_n.
/// DoubleOfConvergent:  value = 2*p_n and the doubles criterion holds.
/// IntermediateNumerator: value = p_n + k*p_{n+1} and the intermediate
/// criterion holds (n >= -1).
struct AvoidedEntry {
    std::int64_t value = 0;
    AvoidedKind kind = AvoidedKind::ConvergentNumerator;
    int n = 0;
    Int k;  // meaningful for IntermediateNumerator only
};

struct AvoidedSetPrefix {
    CFSpec cf;  // normalized spec the entries refer to
    bool swapped = false;
    std::int64_t limit = 0;
    std::vector<AvoidedEntry> entries;  // strictly ascending values

    std::vector<std::int64_t> values() const;
};

/// 2*p_n is avoided iff p_n is odd and either p_{n+1} is odd with
/// a_{n+1} >= 3, or p_{n+1} is even with a_{n+1} >= 2, or p_n = 1.
bool double_is_avoided(const ConvergentTable& table, int n);

/// p_n + k*p_{n+1} is avoided iff p_{n+1} is even, or k = 1 with p_n odd,
/// or k = a_{n+2}-1 with p_{n+2} odd.  Throws for k outside
/// [1, a_{n+2}-1] or n < -1.
bool intermediate_is_avoided(const ConvergentTable& table, int n, const Int& k);

/// Closed-form construction: convergent numerators, qualifying doubles and
/// qualifying intermediate numerators up to `limit`, deduplicated (the value
/// 2 prefers the convergent description when a_1 = 1, otherwise the double).
/// Requires a periodic spec; a_0 >= 2 inputs are normalized first and the
/// entries refer to the normalized indices.
AvoidedSetPrefix avoided_set_theoretical(const CFSpec& cf, std::int64_t limit);

/// Membership by the even-witness criterion: when E(x) > 0, x is avoided
/// iff no even z < 2x has 0 < E(z) < E(x) (mirrored for E(x) < 0).  Scans
/// even z ascending; the first witness, if any, is reported through
/// `witness`.  The engine must be over a normalized (a_0 = 1) spec.
bool membership_test(const ErrorEngine& engine, const Int& x, Int* witness = nullptr);

/// Convenience overload; normalizes and builds an engine per call.
bool membership_test(const CFSpec& cf, const Int& x, Int* witness = nullptr);

/// Brute-force oracle straight from the definition: x <= limit is avoided
/// iff no same-labeled pair y1 < y2 sums to x.  Pure label scan, no
/// continued-fraction theory; also audits arbitrary user partitions.
/// Requires partition.n_max >= limit - 1.
std::vector<std::int64_t> avoided_set_bruteforce(const PartitionPrefix& partition,
                                                 std::int64_t limit);

/// Serial reference for the scan above.
std::vector<std::int64_t> avoided_set_bruteforce_serial(const PartitionPrefix& partition,
                                                        std::int64_t limit);

}  // namespace avoidance
