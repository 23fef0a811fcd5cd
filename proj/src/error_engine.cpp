#include "avoidance/error_engine.hpp"

#include <stdexcept>

namespace avoidance {

namespace {
constexpr int kInitialDepth = 4;
}

ErrorEngine::ErrorEngine(CFSpec cf, int depth_cap)
    : table_(std::make_shared<ConvergentTable>(std::move(cf))), depth_cap_(depth_cap) {
    if (depth_cap_ < 2) throw std::invalid_argument("a bracket needs at least two quotients");
}

ErrorEngine::ErrorEngine(std::shared_ptr<const ConvergentTable> table, int depth_cap)
    : table_(std::move(table)), depth_cap_(depth_cap) {
    if (!table_) throw std::invalid_argument("null convergent table");
    if (depth_cap_ < 2) throw std::invalid_argument("a bracket needs at least two quotients");
}

// The cap counts partial quotients; a bracket at convergent depth d consumes
// a_0 .. a_{d+1}, so the deepest usable convergent index is depth_cap - 2.

int ErrorEngine::initial_depth() const {
    int d = std::min(kInitialDepth, depth_cap_ - 2);
    if (auto maxd = table_->max_depth()) {
        if (*maxd < 0)
            throw QuotientsExhausted("spec too short for any alpha bracket");
        d = std::min(d, *maxd);
    }
    return d;
}

int ErrorEngine::next_depth(int depth) const {
    int limit = depth_cap_ - 2;
    bool finite = false;
    if (auto maxd = table_->max_depth()) {
        if (*maxd < limit) {
            limit = *maxd;
            finite = true;
        }
    }
    if (depth >= limit) {
        if (finite)
            throw QuotientsExhausted("finite spec cannot refine past depth " +
                                     std::to_string(depth));
        throw ResolutionExceeded("depth cap " + std::to_string(depth_cap_) +
                                 " hit before the comparison was decided");
    }
    return std::min(std::max(depth * 2, depth + 1), limit);
}

std::optional<ErrorEngine::Bracket> ErrorEngine::bracket_at(const Int& x, int depth) const {
    auto [lower, upper] = table_->alpha_bounds(depth);
    // x/alpha lies in [x/upper, x/lower]; the nearest-multiple index is
    // pinned once both ends round to the same integer.
    Int q_lo = rat_round(Rat(x) / upper);
    Int q_hi = rat_round(Rat(x) / lower);
    if (q_lo != q_hi) return std::nullopt;
    if (q_lo == 0) return Bracket{Int(0), Rat(x), Rat(x), true};
    return Bracket{q_lo, Rat(x) - q_lo * upper, Rat(x) - q_lo * lower, false};
}

ErrorInterval ErrorEngine::interval(const Int& x, const Rat& min_width) const {
    if (x < 1) throw std::invalid_argument("E(x) is defined for x >= 1");
    if (min_width <= 0) throw std::invalid_argument("min_width must be positive");
    int depth = initial_depth();
    while (true) {
        if (auto br = bracket_at(x, depth)) {
            if (br->exact) {
                // q = 0 makes E(x) = x exactly; report honest open bounds.
                Rat pad = min_width / 4;
                return {x, br->q, Rat(x) - pad, Rat(x) + pad, depth + 2};
            }
            if (br->hi - br->lo < min_width) return {x, br->q, br->lo, br->hi, depth + 2};
        }
        depth = next_depth(depth);
    }
}

SignDecision ErrorEngine::sign(const Int& x) const {
    if (x < 1) throw std::invalid_argument("E(x) is defined for x >= 1");
    int depth = initial_depth();
    while (true) {
        if (auto br = bracket_at(x, depth)) {
            // alpha sits strictly between its convergents, so the bracket is
            // open and endpoint contact already decides
            if (br->exact) return {x, Sign::Positive, depth + 2};  // E(x) = x >= 1
            if (br->lo >= 0) return {x, Sign::Positive, depth + 2};
            if (br->hi <= 0) return {x, Sign::Negative, depth + 2};
        }
        depth = next_depth(depth);
    }
}

std::strong_ordering ErrorEngine::compare(const Int& x, const Int& y) const {
    if (x < 1 || y < 1) throw std::invalid_argument("E(x) is defined for x >= 1");
    if (x == y) return std::strong_ordering::equal;
    int depth = initial_depth();
    while (true) {
        auto bx = bracket_at(x, depth);
        auto by = bracket_at(y, depth);
        if (bx && by) {
            if (bx->exact && by->exact) {
                if (bx->lo < by->lo) return std::strong_ordering::less;
                if (bx->lo > by->lo) return std::strong_ordering::greater;
                return std::strong_ordering::equal;
            }
            // open brackets: endpoint contact still separates strictly,
            // except against an exact value sitting on the endpoint
            bool x_open = !bx->exact, y_open = !by->exact;
            if (bx->hi < by->lo || (bx->hi == by->lo && (x_open || y_open)))
                return std::strong_ordering::less;
            if (by->hi < bx->lo || (by->hi == bx->lo && (x_open || y_open)))
                return std::strong_ordering::greater;
        }
        depth = next_depth(depth);
    }
}

std::strong_ordering ErrorEngine::compare_abs(const Int& x, const Int& y) const {
    if (x < 1 || y < 1) throw std::invalid_argument("E(x) is defined for x >= 1");
    if (x == y) return std::strong_ordering::equal;
    int depth = initial_depth();
    while (true) {
        auto bx = bracket_at(x, depth);
        auto by = bracket_at(y, depth);
        if (bx && by) {
            // take absolute brackets once each sign is decided
            auto abs_of = [](const Bracket& b) -> std::optional<std::pair<Rat, Rat>> {
                if (b.lo >= 0 || b.exact) return std::pair{b.lo, b.hi};
                if (b.hi <= 0) return std::pair{-b.hi, -b.lo};
                return std::nullopt;
            };
            auto ax = abs_of(*bx);
            auto ay = abs_of(*by);
            if (ax && ay) {
                if (bx->exact && by->exact) {
                    if (ax->first < ay->first) return std::strong_ordering::less;
                    if (ax->first > ay->first) return std::strong_ordering::greater;
                    return std::strong_ordering::equal;
                }
                bool open = !bx->exact || !by->exact;
                if (ax->second < ay->first || (open && ax->second == ay->first))
                    return std::strong_ordering::less;
                if (ay->second < ax->first || (open && ay->second == ax->first))
                    return std::strong_ordering::greater;
            }
        }
        depth = next_depth(depth);
    }
}

std::strong_ordering ErrorEngine::compare_to_alpha_multiple(const Int& x, const Rat& c) const {
    if (x < 1) throw std::invalid_argument("E(x) is defined for x >= 1");
    int depth = initial_depth();
    while (true) {
        if (auto br = bracket_at(x, depth)) {
            auto [lower, upper] = table_->alpha_bounds(depth);
            Rat m_lo = c >= 0 ? c * lower : c * upper;
            Rat m_hi = c >= 0 ? c * upper : c * lower;
            bool target_open = c != 0;  // c*alpha is pinned only between open bounds
            if (c == 0 && br->exact) {
                // E(x) = x exactly, target is exactly 0
                return br->lo > 0 ? std::strong_ordering::greater
                                  : std::strong_ordering::equal;
            }
            bool open = !br->exact || target_open;
            if (br->hi < m_lo || (open && br->hi == m_lo)) return std::strong_ordering::less;
            if (br->lo > m_hi || (open && br->lo == m_hi))
                return std::strong_ordering::greater;
        }
        depth = next_depth(depth);
    }
}

bool ErrorEngine::abs_less_than(const Int& x, const Rat& bound) const {
    if (x < 1) throw std::invalid_argument("E(x) is defined for x >= 1");
    if (bound <= 0) return false;
    int depth = initial_depth();
    while (true) {
        if (auto br = bracket_at(x, depth)) {
            if (br->exact) return Rat(x) < bound;
            if (br->lo >= 0 || br->hi <= 0) {
                Rat alo = br->lo >= 0 ? br->lo : -br->hi;
                Rat ahi = br->lo >= 0 ? br->hi : -br->lo;
                if (ahi <= bound) return true;  // |E(x)| < ahi <= bound
                if (alo >= bound) return false;
            }
        }
        depth = next_depth(depth);
    }
}

std::optional<ErrorEngine::Decomposition> ErrorEngine::decompose_by_approx(
    const Int& p, int n, const Int& k_bound) const {
    if (p < 1) throw std::invalid_argument("decomposition target must be >= 1");
    if (n < 0) throw std::invalid_argument("decomposition needs n >= 0");
    if (k_bound < 0) throw std::invalid_argument("k bound must be >= 0");

    Int p_prev = table_->p(n - 1);
    Int p_n = table_->p(n);
    Int p_next = table_->p(n + 1);

    if (p > k_bound * p_next) return std::nullopt;
    if (compare_abs(p, p_prev) != std::strong_ordering::less) return std::nullopt;

    // Greedy descent from the approximation lemma: strip p_n while E keeps
    // the sign of E(p_n), otherwise strip p_{n-1} (one such strip plus
    // a_{n+1} strips of p_n is the lemma's p_{n+1} step).
    Sign sign_pn = sign(p_n).sign;
    Int cur = p, i = 0, j = 0;
    while (cur > 0) {
        if (sign(cur).sign == sign_pn) {
            if (cur < p_n) return std::nullopt;  // blocked: preconditions were violated
            cur -= p_n;
            ++j;
        } else {
            if (cur < p_prev) return std::nullopt;
            cur -= p_prev;
            ++i;
            if (i > k_bound) return std::nullopt;
        }
    }
    return Decomposition{i, j};
}

}  // namespace avoidance
