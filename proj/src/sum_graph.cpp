#include "avoidance/sum_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace avoidance {

namespace {

void validate_s(std::span<const std::int64_t> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) throw std::invalid_argument("S elements must be positive");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("S must be strictly ascending");
    }
}

std::vector<std::int64_t> neighbors_of(std::span<const std::int64_t> s, std::int64_t v,
                                       std::int64_t n_max) {
    // partners u with u != v, 1 <= u <= n_max, u + v in S
    std::vector<std::int64_t> out;
    auto it = std::lower_bound(s.begin(), s.end(), v + 1);
    for (; it != s.end() && *it <= v + n_max; ++it) {
        std::int64_t u = *it - v;
        if (u != v) out.push_back(u);
    }
    return out;
}

SumGraphPrefix build_impl(std::span<const std::int64_t> s, std::int64_t n_max, bool parallel) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    validate_s(s);

    SumGraphPrefix g;
    g.n_max = n_max;
    g.s_values.assign(s.begin(), s.end());
    g.adjacency.resize(static_cast<std::size_t>(n_max));

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t v = 1; v <= n_max; ++v)
            g.adjacency[static_cast<std::size_t>(v - 1)] = neighbors_of(s, v, n_max);
    } else {
        for (std::int64_t v = 1; v <= n_max; ++v)
            g.adjacency[static_cast<std::size_t>(v - 1)] = neighbors_of(s, v, n_max);
    }
    return g;
}

}  // namespace

bool SumGraphPrefix::has_edge(std::int64_t u, std::int64_t v) const {
    if (u < 1 || u > n_max || v < 1 || v > n_max) return false;
    const auto& adj = adjacency[static_cast<std::size_t>(u - 1)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

SumGraphPrefix build_sum_graph(std::span<const std::int64_t> s, std::int64_t n_max) {
    return build_impl(s, n_max, true);
}

SumGraphPrefix build_sum_graph_serial(std::span<const std::int64_t> s, std::int64_t n_max) {
    return build_impl(s, n_max, false);
}

namespace {

// Walk both conflict endpoints up to their lowest common ancestor; the two
// tree paths plus the conflict edge form a simple odd cycle.
std::vector<std::int64_t> extract_odd_cycle(const std::vector<std::int64_t>& parent,
                                            std::int64_t u, std::int64_t v) {
    auto ancestors = [&](std::int64_t w) {
        std::vector<std::int64_t> path{w};
        while (parent[static_cast<std::size_t>(w - 1)] != 0) {
            w = parent[static_cast<std::size_t>(w - 1)];
            path.push_back(w);
        }
        return path;
    };
    std::vector<std::int64_t> pu = ancestors(u);
    std::vector<std::int64_t> pv = ancestors(v);
    // strip the common suffix, keeping the deepest shared vertex
    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    std::vector<std::int64_t> cycle(pu.begin(), pu.end());
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);

    // canonical form: smallest vertex first, smaller second element
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back())
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

}  // namespace

SumGraphReport analyze(const SumGraphPrefix& g) {
    const std::int64_t n = g.n_max;
    SumGraphReport report;
    report.bipartite = true;
    report.component_of.assign(static_cast<std::size_t>(n), -1);
    report.coloring.assign(static_cast<std::size_t>(n), PartitionLabel::A);

    std::vector<std::int64_t> parent(static_cast<std::size_t>(n), 0);
    std::vector<std::int8_t> color(static_cast<std::size_t>(n), -1);

    std::int64_t comp = 0;
    for (std::int64_t root = 1; root <= n; ++root) {
        if (color[static_cast<std::size_t>(root - 1)] != -1) continue;
        color[static_cast<std::size_t>(root - 1)] = 0;
        report.component_of[static_cast<std::size_t>(root - 1)] = comp;
        std::queue<std::int64_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            std::int64_t u = queue.front();
            queue.pop();
            for (std::int64_t v : g.adjacency[static_cast<std::size_t>(u - 1)]) {
                auto& cv = color[static_cast<std::size_t>(v - 1)];
                if (cv == -1) {
                    cv = static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(u - 1)]);
                    parent[static_cast<std::size_t>(v - 1)] = u;
                    report.component_of[static_cast<std::size_t>(v - 1)] = comp;
                    queue.push(v);
                } else if (cv == color[static_cast<std::size_t>(u - 1)] && report.bipartite) {
                    report.bipartite = false;
                    report.odd_cycle = extract_odd_cycle(parent, u, v);
                }
            }
        }
        ++comp;
    }

    report.components = comp;
    if (report.bipartite) {
        for (std::int64_t v = 1; v <= n; ++v)
            report.coloring[static_cast<std::size_t>(v - 1)] =
                color[static_cast<std::size_t>(v - 1)] == 0 ? PartitionLabel::A
                                                            : PartitionLabel::B;
        report.coloring_count = Int(1) << static_cast<unsigned>(comp);
    } else {
        report.coloring.clear();
        report.coloring_count = 0;
    }
    return report;
}

bool is_proper_coloring(const SumGraphPrefix& g, std::span<const PartitionLabel> labels) {
    if (static_cast<std::int64_t>(labels.size()) < g.n_max) return false;
    for (std::int64_t u = 1; u <= g.n_max; ++u)
        for (std::int64_t v : g.adjacency[static_cast<std::size_t>(u - 1)])
            if (v > u && labels[static_cast<std::size_t>(u - 1)] ==
                             labels[static_cast<std::size_t>(v - 1)])
                return false;
    return true;
}

std::vector<std::vector<PartitionLabel>> enumerate_colorings(const SumGraphPrefix& g,
                                                             std::int64_t max_count) {
    std::vector<std::vector<PartitionLabel>> out;
    if (max_count < 1) return out;
    SumGraphReport report = analyze(g);
    if (!report.bipartite) return out;

    // component 0 contains vertex 1 and stays anchored (its root is A)
    std::int64_t flippable = report.components - 1;
    std::int64_t total = flippable >= 63 ? max_count
                                         : std::min<std::int64_t>(max_count, 1LL << flippable);
    for (std::int64_t t = 0; t < total; ++t) {
        std::vector<PartitionLabel> labels = report.coloring;
        for (std::int64_t v = 1; v <= g.n_max; ++v) {
            std::int64_t c = report.component_of[static_cast<std::size_t>(v - 1)];
            if (c >= 1 && c - 1 < 63 && ((t >> (c - 1)) & 1))
                labels[static_cast<std::size_t>(v - 1)] =
                    flip(labels[static_cast<std::size_t>(v - 1)]);
        }
        out.push_back(std::move(labels));
    }
    return out;
}

namespace {

bool contains(std::span<const std::int64_t> s, std::int64_t v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// smallest-a triple certificate a + b = w with a, b, w in S
std::optional<QuadrupleCertificate> triple_for(std::span<const std::int64_t> s,
                                               std::int64_t w) {
    for (std::int64_t a : s) {
        if (2 * a > w) break;
        std::int64_t b = w - a;
        if (contains(s, b) && std::gcd(a, b) == 1)
            return QuadrupleCertificate{b, w, a, w, a, b, w};
    }
    return std::nullopt;
}

}  // namespace

CertificateChain find_quadruple_certificates(std::span<const std::int64_t> s,
                                             std::int64_t cover_target) {
    validate_s(s);
    CertificateChain chain;

    for (std::int64_t w : s) {
        if (w <= chain.max_cover) continue;
        if (chain.max_cover > cover_target) break;
        if (auto cert = triple_for(s, w)) {
            chain.certificates.push_back(*cert);
            chain.max_cover = w;
        }
    }

    if (chain.max_cover <= cover_target) {
        // General quadruples: d, a+d, c, b+c in S with gcd(a,b) = 1,
        // a <= c, b <= d.  For each difference value keep the largest base,
        // which is the least constrained choice.
        std::map<std::int64_t, std::int64_t> base_for_diff;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                std::int64_t diff = s[j] - s[i];
                auto [it, inserted] = base_for_diff.try_emplace(diff, s[i]);
                if (!inserted && s[i] > it->second) it->second = s[i];
            }

        std::vector<std::pair<std::int64_t, std::int64_t>> diffs(base_for_diff.begin(),
                                                                 base_for_diff.end());
        std::map<std::int64_t, QuadrupleCertificate> by_cover;
        for (auto [a, d] : diffs)
            for (auto [b, c] : diffs) {
                if (a > c || b > d) continue;
                if (std::gcd(a, b) != 1) continue;
                std::int64_t cover = a + b;
                if (cover <= chain.max_cover) continue;
                QuadrupleCertificate cert{d, a + d, c, b + c, a, b, cover};
                auto [it, inserted] = by_cover.try_emplace(cover, cert);
                if (!inserted) {
                    auto key = [](const QuadrupleCertificate& q) {
                        return std::tuple(q.a, q.b, q.d, q.c);
                    };
                    if (key(cert) < key(it->second)) it->second = cert;
                }
            }

        for (auto& [cover, cert] : by_cover) {
            if (chain.max_cover > cover_target) break;
            if (cover <= chain.max_cover) continue;
            chain.certificates.push_back(cert);
            chain.max_cover = cover;
        }
    }

    chain.reached = chain.max_cover > cover_target;
    return chain;
}

CrtDecomposition crt_decomposition(std::int64_t m, std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");
    Int ab = Int(a) * b;
    if (m < 1 || Int(m) > ab) throw std::invalid_argument("m must satisfy 0 < m <= a*b");

    // x = m * a^{-1} (mod b), lifted into [1, b]; then y from the identity.
    std::int64_t x;
    if (b == 1) {
        x = 1;
    } else {
        // extended Euclid for a^{-1} mod b
        std::int64_t r0 = a % b, r1 = b, s0 = 1, s1 = 0;
        while (r0 != 0) {
            std::int64_t quot = r1 / r0;
            std::int64_t r2 = r1 - quot * r0;
            std::int64_t s2 = s1 - quot * s0;
            r1 = r0; r0 = r2;
            s1 = s0; s0 = s2;
        }
        std::int64_t inv = ((s1 % b) + b) % b;
        x = static_cast<std::int64_t>(Int(m % b) * inv % b);
        if (x == 0) x = b;
    }
    // x*a = m (mod b) always has y_num divisible by b; y >= 0 can fail for
    // m >= a + b, where no representation in the stated ranges exists.
    Int y_num = Int(x) * a - m;
    if (y_num < 0)
        throw std::domain_error("m has no representation x*a - y*b in the stated ranges");
    Int y = y_num / b;
    if (y >= a || y_num % b != 0)
        throw std::logic_error("CRT decomposition out of range");
    return {x, static_cast<std::int64_t>(y)};
}

bool has_infinitely_many_unit_quotients(const CFSpec& cf) {
    if (!cf.periodic())
        throw Undecidable("a finite prefix cannot decide an infinitary quotient property");
    for (const Int& a : cf.period)
        if (a == 1) return true;
    return false;
}

std::optional<std::vector<PartitionLabel>> free_interval_coloring(
    std::span<const std::int64_t> numerators, std::int64_t n_max,
    std::span<const PartitionLabel> reference) {
    validate_s(numerators);
    if (numerators.empty() || numerators.front() != 1)
        throw std::invalid_argument("numerator list must start at p_0 = 1");
    if (numerators.back() <= n_max)
        throw std::invalid_argument("numerator list must extend past n_max");
    if (static_cast<std::int64_t>(reference.size()) < n_max)
        throw std::invalid_argument("reference labeling shorter than n_max");

    // The construction is valid from the last index where doubling fails.
    std::size_t start = 1;
    for (std::size_t m = 1; m < numerators.size(); ++m)
        if (numerators[m] < 2 * numerators[m - 1]) start = m + 1;
    if (start >= numerators.size() || numerators[start - 1] > n_max) return std::nullopt;

    // Flipping every free slot would merely swap the two parts; flipping a
    // single zone leaves the rest agreeing with the reference, so the result
    // is a genuinely different coloring whenever several zones exist.
    std::size_t target = start;
    for (std::size_t m = start; m < numerators.size(); ++m) {
        if (numerators[m - 1] > n_max) break;
        if (2 * numerators[m - 1] <= numerators[m]) target = m;  // free slot exists
    }

    std::vector<PartitionLabel> labels(reference.begin(),
                                       reference.begin() + static_cast<std::ptrdiff_t>(n_max));
    bool flipped_any = false;
    for (std::size_t m = start; m < numerators.size(); ++m) {
        std::int64_t lo = numerators[m - 1];
        std::int64_t hi = numerators[m];
        if (lo > n_max) break;
        for (std::int64_t x = lo; x < hi && x <= n_max; ++x) {
            if (2 * x <= hi) {
                // free interval: any choice avoids the numerator sums
                PartitionLabel choice = reference[static_cast<std::size_t>(x - 1)];
                if (m == target) {
                    choice = flip(choice);
                    flipped_any = true;
                }
                labels[static_cast<std::size_t>(x - 1)] = choice;
            } else {
                labels[static_cast<std::size_t>(x - 1)] =
                    flip(labels[static_cast<std::size_t>(hi - x - 1)]);
            }
        }
    }
    if (!flipped_any) return std::nullopt;
    return labels;
}

}  // namespace avoidance
