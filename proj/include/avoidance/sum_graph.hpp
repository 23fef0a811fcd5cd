#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "avoidance/partition.hpp"

namespace avoidance {

/// Sum graph on vertices 1..n_max: an edge {x, y} iff x != y and
/// x + y is in s_values.  Edge existence for all vertex pairs is exact only
/// when the caller supplies every element of S up to 2*n_max - 1; a missing
/// tail silently changes the prefix semantics.
struct SumGraphPrefix {
    std::int64_t n_max = 0;
    std::vector<std::int64_t> s_values;               // strictly ascending
    std::vector<std::vector<std::int64_t>> adjacency;  // adjacency[v-1], ascending

    bool has_edge(std::int64_t u, std::int64_t v) const;
};

/// OpenMP kernel (independent per vertex) and its serial reference.
SumGraphPrefix build_sum_graph(std::span<const std::int64_t> s, std::int64_t n_max);
SumGraphPrefix build_sum_graph_serial(std::span<const std::int64_t> s, std::int64_t n_max);

struct SumGraphReport {
    bool bipartite = false;
    std::int64_t components = 0;
    /// component id per vertex (ids in order of smallest member vertex)
    std::vector<std::int64_t> component_of;
    /// BFS 2-coloring, meaningful when bipartite; roots get label A
    std::vector<PartitionLabel> coloring;
    /// 2^components when bipartite, 0 otherwise
    Int coloring_count;
    /// odd-cycle witness (closed walk, consecutive entries adjacent),
    /// nonempty iff not bipartite
    std::vector<std::int64_t> odd_cycle;
};

/// BFS 2-coloring per component with odd-cycle extraction on conflict.
SumGraphReport analyze(const SumGraphPrefix& g);

/// No edge joins two same-labeled vertices.
bool is_proper_coloring(const SumGraphPrefix& g, std::span<const PartitionLabel> labels);

/// Up to max_count distinct proper 2-colorings in canonical order: vertex 1
/// is anchored to label A and the remaining components are flipped in
/// binary-counter order.  Empty when the graph is not bipartite.
std::vector<std::vector<PartitionLabel>> enumerate_colorings(const SumGraphPrefix& g,
                                                             std::int64_t max_count);

/// Witness that all integers below a+b share one component: S contains
/// d, a+d, c and b+c with gcd(a,b) = 1, a <= c, b <= d.  Triples
/// (a, b, a+b in S) are the degenerate case d=b, c=a.
struct QuadrupleCertificate {
    std::int64_t d = 0, a_plus_d = 0, c = 0, b_plus_c = 0;
    std::int64_t a = 0, b = 0;
    std::int64_t covers_below = 0;  // a + b
};

struct CertificateChain {
    std::vector<QuadrupleCertificate> certificates;  // strictly increasing covers
    bool reached = false;      // max_cover > cover_target
    std::int64_t max_cover = 0;
};

/// Greedily collect certificates with increasing covers_below until the
/// target is exceeded or s is exhausted.  Triples are preferred; general
/// quadruples are searched only past the last triple cover.
CertificateChain find_quadruple_certificates(std::span<const std::int64_t> s,
                                             std::int64_t cover_target);

struct CrtDecomposition {
    std::int64_t x = 0, y = 0;
};

/// The unique (x, y) with m = x*a - y*b, 0 < x <= b, 0 <= y < a, for
/// coprime a, b and 0 < m <= a*b.  Throws std::invalid_argument otherwise.
CrtDecomposition crt_decomposition(std::int64_t m, std::int64_t a, std::int64_t b);

/// Decidable thanks to eventual periodicity: true iff the periodic tail
/// contains a 1.  Throws Undecidable for finite specs.
bool has_infinitely_many_unit_quotients(const CFSpec& cf);

/// The free-interval construction: when the numerator sequence eventually
/// doubles (no 1s in the tail), integers in [p_{n-1}, floor(p_n / 2)] may be
/// labeled arbitrarily and x > floor(p_n / 2) opposite to p_n - x.  Flips
/// the reference labels on every free integer, yielding a proper coloring of
/// the numerators-only sum graph that differs from the reference.  Returns
/// nullopt when no free interval intersects [1, n_max].  `numerators` must
/// start at 1 and contain at least one value > n_max.
std::optional<std::vector<PartitionLabel>> free_interval_coloring(
    std::span<const std::int64_t> numerators, std::int64_t n_max,
    std::span<const PartitionLabel> reference);

}  // namespace avoidance
