#include "avoidance/avoided_set.hpp"

#include <map>
#include <stdexcept>

namespace avoidance {

std::vector<std::int64_t> AvoidedSetPrefix::values() const {
    std::vector<std::int64_t> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.value);
    return out;
}

bool double_is_avoided(const ConvergentTable& table, int n) {
    if (n < 0) throw std::invalid_argument("doubles criterion needs n >= 0");
    Int pn = table.p(n);
    if (is_even(pn)) return false;
    if (pn == 1) return true;
    Int pn1 = table.p(n + 1);
    Int a = table.quotient(n + 1);
    if (is_odd(pn1)) return a >= 3;
    return a >= 2;
}

bool intermediate_is_avoided(const ConvergentTable& table, int n, const Int& k) {
    if (n < -1) throw std::invalid_argument("intermediate criterion needs n >= -1");
    Int a = table.quotient(n + 2);
    if (k < 1 || k > a - 1)
        throw std::invalid_argument("intermediate index k outside [1, a_{n+2}-1]");
    if (is_even(table.p(n + 1))) return true;
    if (k == 1 && is_odd(table.p(n))) return true;
    return k == a - 1 && is_odd(table.p(n + 2));
}

namespace {

int kind_rank(AvoidedKind k) {
    switch (k) {
        case AvoidedKind::ConvergentNumerator: return 2;
        case AvoidedKind::IntermediateNumerator: return 1;
        case AvoidedKind::DoubleOfConvergent: return 0;
    }
    return -1;
}

}  // namespace

AvoidedSetPrefix avoided_set_theoretical(const CFSpec& cf, std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    if (!cf.periodic())
        throw std::invalid_argument(
            "avoided-set construction needs a periodic (irrational) spec");

    auto norm = normalize_to_unit_interval(cf);
    ConvergentTable table(norm.cf);
    Int bound(limit);

    std::map<std::int64_t, AvoidedEntry> by_value;
    auto add = [&](AvoidedEntry e) {
        auto [it, inserted] = by_value.try_emplace(e.value, e);
        if (!inserted && kind_rank(e.kind) > kind_rank(it->second.kind)) it->second = e;
    };

    for (int n = 0;; ++n) {
        Int p = table.p(n);
        if (p > bound) break;
        add({static_cast<std::int64_t>(p), AvoidedKind::ConvergentNumerator, n, Int(0)});
    }

    for (int n = 0;; ++n) {
        Int d = 2 * table.p(n);
        if (d > bound) break;
        if (double_is_avoided(table, n))
            add({static_cast<std::int64_t>(d), AvoidedKind::DoubleOfConvergent, n, Int(0)});
    }

    // n = -1 covers the integers strictly between p_0 = 1 and p_1; its k = 1
    // value is 2 = 2*p_0, already produced by the doubles case above.
    for (int n = -1;; ++n) {
        Int pn1 = table.p(n + 1);
        if (pn1 >= bound) break;
        Int pn = table.p(n);
        Int a = table.quotient(n + 2);
        for (Int k = (n == -1 ? 2 : 1); k < a; ++k) {
            Int x = pn + k * pn1;
            if (x > bound) break;
            if (intermediate_is_avoided(table, n, k))
                add({static_cast<std::int64_t>(x), AvoidedKind::IntermediateNumerator, n, k});
        }
    }

    AvoidedSetPrefix out;
    out.cf = norm.cf;
    out.swapped = norm.swapped;
    out.limit = limit;
    out.entries.reserve(by_value.size());
    for (auto& [value, entry] : by_value) out.entries.push_back(entry);
    return out;
}

bool membership_test(const ErrorEngine& engine, const Int& x, Int* witness) {
    if (x < 1) throw std::invalid_argument("membership is defined for x >= 1");
    Sign sx = engine.sign(x).sign;
    for (Int z = 2; z < 2 * x; z += 2) {
        if (engine.sign(z).sign != sx) continue;
        auto order = engine.compare(z, x);
        bool between = sx == Sign::Positive ? order == std::strong_ordering::less
                                            : order == std::strong_ordering::greater;
        if (between) {
            if (witness) *witness = z;
            return false;
        }
    }
    return true;
}

bool membership_test(const CFSpec& cf, const Int& x, Int* witness) {
    if (!cf.periodic())
        throw std::invalid_argument("membership test needs a periodic (irrational) spec");
    ErrorEngine engine(normalize_to_unit_interval(cf).cf);
    return membership_test(engine, x, witness);
}

namespace {

bool sum_avoided(const PartitionPrefix& partition, std::int64_t x) {
    for (std::int64_t y = 1; y <= (x - 1) / 2; ++y)
        if (partition.label(y) == partition.label(x - y)) return false;
    return true;
}

}  // namespace

std::vector<std::int64_t> avoided_set_bruteforce(const PartitionPrefix& partition,
                                                 std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    if (partition.n_max < limit - 1)
        throw std::invalid_argument("partition prefix too short for the requested limit");

    std::vector<std::uint8_t> avoided(static_cast<std::size_t>(limit), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t x = 1; x <= limit; ++x)
        avoided[static_cast<std::size_t>(x - 1)] = sum_avoided(partition, x) ? 1 : 0;

    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x <= limit; ++x)
        if (avoided[static_cast<std::size_t>(x - 1)]) out.push_back(x);
    return out;
}

std::vector<std::int64_t> avoided_set_bruteforce_serial(const PartitionPrefix& partition,
                                                        std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    if (partition.n_max < limit - 1)
        throw std::invalid_argument("partition prefix too short for the requested limit");

    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x <= limit; ++x)
        if (sum_avoided(partition, x)) out.push_back(x);
    return out;
}

}  // namespace avoidance
