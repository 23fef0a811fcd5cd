#include "avoidance/genfib.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace avoidance {

namespace {

void require_coprime(const GenFibSeed& seed) {
    if (seed.s1 < 1 || seed.s2 < 1)
        throw std::invalid_argument("seeds must be positive");
    if (boost::multiprecision::gcd(seed.s1, seed.s2) != 1)
        throw std::invalid_argument("seeds must be coprime");
}

}  // namespace

CFSpec cf_with_numerator_pair(const Int& lo, const Int& hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("need 1 <= lo <= hi");
    if (boost::multiprecision::gcd(lo, hi) != 1)
        throw std::invalid_argument("numerator pair must be coprime");
    if (lo == hi) {
        if (lo != 1) throw std::invalid_argument("equal numerators only for 1, 1");
        return CFSpec{{Int(1)}, {Int(1)}};  // p_{-1} = p_0 = 1
    }

    // Greedy expansion of hi/lo, then reversed: the mirror identity turns a
    // trailing convergent denominator into a trailing numerator, giving
    // p_{k-1} = lo, p_k = hi for the reversed quotients.
    std::vector<Int> quotients;
    Int a = hi, b = lo;
    while (b != 0) {
        quotients.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    std::reverse(quotients.begin(), quotients.end());
    return CFSpec{std::move(quotients), {Int(1)}};
}

GenFibClassification classify_genfib(const GenFibSeed& seed) {
    require_coprime(seed);

    bool unique = seed.s1 < seed.s2 || is_even(seed.s1) || is_even(seed.s2) ||
                  seed.s1 == seed.s2;  // equal coprime seeds are 1, 1: Fibonacci
    if (!unique) return {GenFibVerdict::NotAvoidable, "", std::nullopt};

    GenFibClassification out;
    out.verdict = GenFibVerdict::UniquelyAvoidable;
    std::ostringstream text;
    if (seed.s1 <= seed.s2) {
        out.embedding_cf = cf_with_numerator_pair(seed.s1, seed.s2);
        text << seed.s1 << " and " << seed.s2
             << " are consecutive convergent numerators of " << format_cf(*out.embedding_cf)
             << "; every later quotient is 1, so all sequence terms are numerators";
    } else {
        out.embedding_cf = cf_with_numerator_pair(seed.s2, seed.s1 + seed.s2);
        text << seed.s2 << " and " << (seed.s1 + seed.s2)
             << " are consecutive convergent numerators of " << format_cf(*out.embedding_cf)
             << "; " << seed.s1
             << " is their difference, an avoided intermediate numerator";
    }
    out.embedding = text.str();
    return out;
}

std::vector<Int> genfib_sequence(const GenFibSeed& seed, const Int& limit) {
    require_coprime(seed);
    if (limit < std::max(seed.s1, seed.s2))
        throw std::invalid_argument("limit must reach both seeds");

    std::vector<Int> terms;
    auto push = [&](const Int& v) {
        if (v <= limit) terms.push_back(v);
    };
    push(seed.s1);
    push(seed.s2);
    Int prev = seed.s1, cur = seed.s2;
    while (true) {
        Int next = prev + cur;
        if (next > limit) break;
        terms.push_back(next);
        prev = cur;
        cur = next;
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return terms;
}

}  // namespace avoidance
