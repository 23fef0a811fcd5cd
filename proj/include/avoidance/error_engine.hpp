#pragma once

#include <compare>
#include <memory>
#include <optional>

#include "avoidance/cf.hpp"
#include "avoidance/numeric.hpp"

namespace avoidance {

inline constexpr int kDefaultDepthCap = 512;

/// Exact rational bracket around E(x) = x - q*alpha, q the index of the
/// integer multiple of alpha nearest x.
struct ErrorInterval {
    Int x;
    Int q;  // nearest-multiple index, q >= 0
    Rat lo, hi;
    int depth;  // partial quotients consumed (a bracket at convergent d uses d + 2)
};

enum class Sign { Negative, Positive };

struct SignDecision {
    Int x;
    Sign sign;  // Negative: x is in the A part; Positive: the B part
    int depth_used;  // partial quotients consumed
};

/// Exact decision procedures about E(x) = x - q*alpha.
///
/// alpha is only ever known through rational brackets taken from consecutive
/// convergents; every query refines the bracket (depth doubles each round)
/// until the answer is forced.  For an irrational alpha, E(x) is never zero,
/// never a half-integer multiple boundary, and never equal to E(y) for
/// y != x, so every query below terminates.  Finite specs fail with
/// QuotientsExhausted once their quotients cannot decide; the depth cap
/// turns a misconfigured cap into ResolutionExceeded.
class ErrorEngine {
  public:
    explicit ErrorEngine(CFSpec cf, int depth_cap = kDefaultDepthCap);
    explicit ErrorEngine(std::shared_ptr<const ConvergentTable> table,
                         int depth_cap = kDefaultDepthCap);

    const ConvergentTable& table() const { return *table_; }
    int depth_cap() const { return depth_cap_; }

    /// Bracket of width < min_width with the nearest-multiple index pinned.
    ErrorInterval interval(const Int& x, const Rat& min_width) const;

    SignDecision sign(const Int& x) const;

    /// Strict ordering of the exact reals E(x), E(y).
    std::strong_ordering compare(const Int& x, const Int& y) const;

    /// Strict ordering of |E(x)| and |E(y)|.
    std::strong_ordering compare_abs(const Int& x, const Int& y) const;

    /// E(x) versus c*alpha for a rational c (covers thresholds like
    /// alpha/2, alpha/3, alpha/4).
    std::strong_ordering compare_to_alpha_multiple(const Int& x, const Rat& c) const;

    /// |E(x)| < bound for a rational bound > 0.
    bool abs_less_than(const Int& x, const Rat& bound) const;

    struct Decomposition {
        Int i, j;  // p = i*p_{n-1} + j*p_n
    };

    /// Greedy descent writing p as i*p_{n-1} + j*p_n with i <= k_bound,
    /// valid whenever |E(p)| < |E(p_{n-1})| and p <= k_bound * p_{n+1}.
    /// Returns nullopt when those preconditions fail.
    std::optional<Decomposition> decompose_by_approx(const Int& p, int n,
                                                     const Int& k_bound) const;

  private:
    // lo <= E(x) <= hi; exact (lo == hi) only when q == 0.
    struct Bracket {
        Int q;
        Rat lo, hi;
        bool exact;
    };

    // nullopt while the nearest-multiple index is still ambiguous.
    std::optional<Bracket> bracket_at(const Int& x, int depth) const;

    // Step the refinement schedule; throws when no deeper bracket exists.
    int next_depth(int depth) const;
    int initial_depth() const;

    std::shared_ptr<const ConvergentTable> table_;
    int depth_cap_;
};

}  // namespace avoidance
