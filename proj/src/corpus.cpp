#include "avoidance/corpus.hpp"

#include <random>
#include <stdexcept>

namespace avoidance {

std::vector<CFSpec> corpus_generate(std::uint64_t seed, std::size_t count) {
    if (count < 1) throw std::invalid_argument("corpus needs count >= 1");

    std::mt19937_64 rng(seed);
    auto draw = [&](std::uint64_t n) { return rng() % n; };

    std::vector<CFSpec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        CFSpec cf;
        std::size_t prefix_len = 1 + draw(4);
        cf.prefix.push_back(Int(1 + draw(3)));  // a_0 in {1, 2, 3}
        for (std::size_t k = 1; k < prefix_len; ++k) cf.prefix.push_back(Int(1 + draw(6)));
        std::size_t period_len = 1 + draw(4);
        for (std::size_t k = 0; k < period_len; ++k) cf.period.push_back(Int(1 + draw(6)));
        out.push_back(std::move(cf));
    }
    return out;
}

}  // namespace avoidance
