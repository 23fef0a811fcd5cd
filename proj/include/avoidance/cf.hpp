#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "avoidance/errors.hpp"
#include "avoidance/numeric.hpp"

namespace avoidance {

/// A number alpha > 1 described by the partial quotients of its simple
/// continued fraction.  `prefix` holds a_0, a_1, ...; `period` is the
/// repeating tail.  A nonempty period pins down a quadratic irrational;
/// an empty period is a finite-precision spec and operations that need
/// more quotients throw QuotientsExhausted instead of fabricating them.
struct CFSpec {
    std::vector<Int> prefix;
    std::vector<Int> period;

    bool periodic() const { return !period.empty(); }
    bool operator==(const CFSpec&) const = default;
};

/// Parse "[a0;a1,a2,(b1,b2)]" (period parenthesized and optional,
/// whitespace ignored).  Throws ParseError on malformed input or any
/// quotient < 1.
CFSpec parse_cf(std::string_view text);

/// Canonical form with no whitespace, e.g. "[1;2,(3,4)]".  parse_cf is a
/// left inverse of this.
std::string format_cf(const CFSpec& cf);

/// a_n with the period unrolled.  Throws QuotientsExhausted when a finite
/// spec is too short.
Int quotient_at(const CFSpec& cf, std::size_t n);

struct Convergent {
    int n;  // index, n >= -2
    Int p;
    Int q;
};

/// Convergents p_n/q_n for n = -2..upto_n, seeds included
/// (p_{-2}=0, q_{-2}=1, p_{-1}=1, q_{-1}=0).
std::vector<Convergent> convergents(const CFSpec& cf, int upto_n);

struct NormalizedCF {
    CFSpec cf;     // has a_0 == 1, so 1 < alpha < 2
    bool swapped;  // true when the input had a_0 >= 2; A/B labels flip
};

/// Rewrite [a0;a1,...] with a0 >= 2 as [1;a0-1,a1,...].  The two specs
/// describe dual numbers (1/alpha + 1/alpha' = 1) with the same convergent
/// numerators, the rewritten one additionally exposing the numerator 1, and
/// they induce the same two-part partition up to swapping the parts.
/// Idempotent; specs with a_0 == 1 pass through unchanged.
NormalizedCF normalize_to_unit_interval(const CFSpec& cf);

struct IntermediateNumerator {
    int n;      // n >= -1
    Int k;      // 1 <= k <= a_{n+2} - 1
    Int value;  // p_n + k * p_{n+1}, strictly between p_{n+1} and p_{n+2}
};

/// Numerators of the intermediate fractions between p_{n+1} and p_{n+2}.
/// Empty when a_{n+2} == 1.  n = -1 is allowed (values between p_0 and p_1).
std::vector<IntermediateNumerator> intermediate_numerators(const CFSpec& cf, int n);

/// Lazily extended table of quotients and convergents for one spec.
/// Thread-safe: concurrent readers may trigger extension; the contents are
/// a pure function of the spec, so results never depend on interleaving.
class ConvergentTable {
  public:
    explicit ConvergentTable(CFSpec cf);

    const CFSpec& spec() const { return cf_; }

    Int p(int n) const;         // numerator, n >= -2
    Int q(int n) const;         // denominator, n >= -2
    Int quotient(int n) const;  // a_n, n >= 0

    /// Exact bounds lower < alpha < upper from convergents depth and
    /// depth+1.  Widths shrink as 1/(q_d q_{d+1}).  depth >= 0.
    std::pair<Rat, Rat> alpha_bounds(int depth) const;

    /// Largest usable bound depth for a finite spec; nullopt when periodic.
    std::optional<int> max_depth() const;

  private:
    void extend_to(int n) const;  // caller holds the writer lock
    void reserve_rows(int n) const;

    CFSpec cf_;
    mutable std::shared_mutex mu_;
    mutable std::vector<Convergent> rows_;  // rows_[i] holds index n = i - 2
};

}  // namespace avoidance
