#include "avoidance/cf.hpp"

#include <cctype>
#include <mutex>
#include <sstream>

namespace avoidance {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a positive integer in CF spec");
        Int value(std::string(text.substr(start, pos - start)));
        if (value < 1) throw ParseError("partial quotients must be >= 1");
        return value;
    }
};

void validate(const CFSpec& cf) {
    if (cf.prefix.empty()) throw ParseError("empty CF spec");
    for (const Int& a : cf.prefix)
        if (a < 1) throw ParseError("partial quotients must be >= 1");
    for (const Int& a : cf.period)
        if (a < 1) throw ParseError("partial quotients must be >= 1");
}

}  // namespace

CFSpec parse_cf(std::string_view text) {
    Cursor cur{text};
    CFSpec cf;

    if (!cur.eat('[')) throw ParseError("CF spec must start with '['");
    cf.prefix.push_back(cur.integer());

    if (!cur.eat(']')) {
        if (!cur.eat(';')) throw ParseError("expected ';' after a_0");
        bool saw_period = false;
        while (true) {
            if (cur.peek() == '(') {
                cur.eat('(');
                cf.period.push_back(cur.integer());
                while (cur.eat(',')) cf.period.push_back(cur.integer());
                if (!cur.eat(')')) throw ParseError("unterminated period");
                saw_period = true;
                break;
            }
            cf.prefix.push_back(cur.integer());
            if (!cur.eat(',')) break;
        }
        (void)saw_period;
        if (!cur.eat(']')) throw ParseError("expected ']' at end of CF spec");
    }

    cur.skip_ws();
    if (cur.pos != text.size()) throw ParseError("trailing input after CF spec");
    validate(cf);
    return cf;
}

std::string format_cf(const CFSpec& cf) {
    std::ostringstream out;
    out << '[' << cf.prefix.front();
    if (cf.prefix.size() > 1 || !cf.period.empty()) out << ';';
    for (std::size_t i = 1; i < cf.prefix.size(); ++i) {
        if (i > 1) out << ',';
        out << cf.prefix[i];
    }
    if (!cf.period.empty()) {
        if (cf.prefix.size() > 1) out << ',';
        out << '(';
        for (std::size_t i = 0; i < cf.period.size(); ++i) {
            if (i > 0) out << ',';
            out << cf.period[i];
        }
        out << ')';
    }
    out << ']';
    return out.str();
}

Int quotient_at(const CFSpec& cf, std::size_t n) {
    if (n < cf.prefix.size()) return cf.prefix[n];
    if (cf.period.empty())
        throw QuotientsExhausted("finite CF spec has no quotient a_" + std::to_string(n));
    return cf.period[(n - cf.prefix.size()) % cf.period.size()];
}

std::vector<Convergent> convergents(const CFSpec& cf, int upto_n) {
    if (upto_n < -2) throw std::invalid_argument("convergent index below -2");
    std::vector<Convergent> rows;
    rows.reserve(static_cast<std::size_t>(upto_n + 3));
    rows.push_back({-2, Int(0), Int(1)});
    if (upto_n >= -1) rows.push_back({-1, Int(1), Int(0)});
    for (int n = 0; n <= upto_n; ++n) {
        Int a = quotient_at(cf, static_cast<std::size_t>(n));
        const Convergent& c1 = rows[rows.size() - 1];
        const Convergent& c2 = rows[rows.size() - 2];
        rows.push_back({n, a * c1.p + c2.p, a * c1.q + c2.q});
    }
    return rows;
}

NormalizedCF normalize_to_unit_interval(const CFSpec& cf) {
    validate(cf);
    if (cf.prefix.front() == 1) return {cf, false};
    CFSpec dual;
    dual.prefix.reserve(cf.prefix.size() + 1);
    dual.prefix.push_back(Int(1));
    dual.prefix.push_back(cf.prefix.front() - 1);
    dual.prefix.insert(dual.prefix.end(), cf.prefix.begin() + 1, cf.prefix.end());
    dual.period = cf.period;
    return {std::move(dual), true};
}

std::vector<IntermediateNumerator> intermediate_numerators(const CFSpec& cf, int n) {
    if (n < -1) throw std::invalid_argument("intermediate numerators need n >= -1");
    auto rows = convergents(cf, n + 1);
    const Int& pn = rows[static_cast<std::size_t>(n + 2)].p;
    const Int& pn1 = rows[static_cast<std::size_t>(n + 3)].p;
    Int a = quotient_at(cf, static_cast<std::size_t>(n + 2));

    std::vector<IntermediateNumerator> out;
    for (Int k = 1; k < a; ++k) out.push_back({n, k, pn + k * pn1});
    return out;
}

ConvergentTable::ConvergentTable(CFSpec cf) : cf_(std::move(cf)) {
    validate(cf_);
    rows_.push_back({-2, Int(0), Int(1)});
    rows_.push_back({-1, Int(1), Int(0)});
}

void ConvergentTable::extend_to(int n) const {
    // caller holds the writer lock
    while (static_cast<int>(rows_.size()) < n + 3) {
        int next = static_cast<int>(rows_.size()) - 2;
        Int a = quotient_at(cf_, static_cast<std::size_t>(next));
        const Convergent& c1 = rows_[rows_.size() - 1];
        const Convergent& c2 = rows_[rows_.size() - 2];
        rows_.push_back({next, a * c1.p + c2.p, a * c1.q + c2.q});
    }
}

void ConvergentTable::reserve_rows(int n) const {
    {
        std::shared_lock lock(mu_);
        if (static_cast<int>(rows_.size()) >= n + 3) return;
    }
    std::unique_lock lock(mu_);
    extend_to(n);
}

Int ConvergentTable::p(int n) const {
    if (n < -2) throw std::invalid_argument("convergent index below -2");
    reserve_rows(n);
    std::shared_lock lock(mu_);
    return rows_[static_cast<std::size_t>(n + 2)].p;
}

Int ConvergentTable::q(int n) const {
    if (n < -2) throw std::invalid_argument("convergent index below -2");
    reserve_rows(n);
    std::shared_lock lock(mu_);
    return rows_[static_cast<std::size_t>(n + 2)].q;
}

Int ConvergentTable::quotient(int n) const {
    if (n < 0) throw std::invalid_argument("quotient index below 0");
    return quotient_at(cf_, static_cast<std::size_t>(n));
}

std::pair<Rat, Rat> ConvergentTable::alpha_bounds(int depth) const {
    if (depth < 0) throw std::invalid_argument("alpha_bounds needs depth >= 0");
    reserve_rows(depth + 1);
    Rat even_side, odd_side;
    {
        std::shared_lock lock(mu_);
        const Convergent& cd = rows_[static_cast<std::size_t>(depth + 2)];
        const Convergent& cd1 = rows_[static_cast<std::size_t>(depth + 3)];
        even_side = Rat(cd.p, cd.q);
        odd_side = Rat(cd1.p, cd1.q);
    }
    // even-indexed convergents approach from below, odd-indexed from above
    if (depth % 2 == 0) return {even_side, odd_side};
    return {odd_side, even_side};
}

std::optional<int> ConvergentTable::max_depth() const {
    if (cf_.periodic()) return std::nullopt;
    return static_cast<int>(cf_.prefix.size()) - 2;
}

}  // namespace avoidance
