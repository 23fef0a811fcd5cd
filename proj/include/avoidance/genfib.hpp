#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avoidance/cf.hpp"

namespace avoidance {

/// Seeds of a generalized Fibonacci sequence: coprime s1, s2 and
/// s_n = s_{n-1} + s_{n-2}.
struct GenFibSeed {
    Int s1, s2;
};

enum class GenFibVerdict { UniquelyAvoidable, NotAvoidable };

struct GenFibClassification {
    GenFibVerdict verdict;
    /// How the sequence embeds into the convergent-numerator framework;
    /// empty for NotAvoidable.
    std::string embedding;
    std::optional<CFSpec> embedding_cf;
};

/// The sequence set is uniquely avoidable iff s1 < s2 or either seed is
/// even (s1 = s2 forces both to be 1, which duplicates into the s1 < s2
/// case); otherwise it is not avoidable at all.  Throws
/// std::invalid_argument for non-coprime seeds.
GenFibClassification classify_genfib(const GenFibSeed& seed);

/// All sequence terms <= limit as a sorted set (duplicates merged).
std::vector<Int> genfib_sequence(const GenFibSeed& seed, const Int& limit);

/// A spec with all-ones tail whose consecutive convergent numerators are
/// exactly (lo, hi): the quotients are the reversed greedy expansion of
/// hi/lo.  Requires 1 <= lo <= hi coprime (lo == hi only for 1, 1).
CFSpec cf_with_numerator_pair(const Int& lo, const Int& hi);

}  // namespace avoidance
