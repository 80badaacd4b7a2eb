#include "desub/generate.hpp"

namespace desub {

namespace {

// First-letter map of sigma_{k+1} ... sigma_{k+len} (applied to the level
// k+len letter, giving the level k letter).
Letter chase_first(const DirectiveSpec& spec, std::size_t k, std::size_t len,
                   Letter seed) {
    Letter cur = seed;
    for (std::size_t i = k + len; i > k; --i)
        cur = spec.at(i - 1).image(cur)[0];
    return cur;
}

} // namespace

LimitPoint seed_limit_point(const DirectiveSpec& spec, Letter seed) {
    spec.alphabet().index(seed);
    std::size_t r = spec.preperiod_size();
    std::size_t s = spec.period_size();
    if (s == 0) throw Error("generation needs a directive with a nonempty period");

    // Orbit of the seed under the one-period first-letter map, taken at the
    // period boundary: H(x) = first(sigma_{r+1} ... sigma_{r+s}(x)).
    std::vector<Letter> orbit{seed};
    std::optional<std::size_t> fixed_at;
    for (std::size_t t = 0; t <= spec.alphabet().size(); ++t) {
        Letter next = chase_first(spec, r, s, orbit.back());
        if (next == orbit.back()) {
            fixed_at = t;
            break;
        }
        for (std::size_t j = 0; j + 1 < orbit.size(); ++j)
            if (orbit[j] == next) {
                std::string cycle(orbit.begin() + static_cast<long>(j), orbit.end());
                throw Error(std::string("seed '") + seed +
                            "' does not converge: its first-letter orbit cycles "
                            "through {" + cycle + "} without settling");
            }
        orbit.push_back(next);
    }
    if (!fixed_at)
        throw Error(std::string("seed '") + seed +
                    "' does not converge to a fixed first letter");

    // The fixed letter alpha heads a Konig chain with period one lap; the
    // levels above the entry are forced by the first-letter maps.
    Letter alpha = orbit.back();
    std::size_t entry = r + *fixed_at * s;
    KonigChain chain;
    chain.cycle.assign(s, alpha);
    for (std::size_t j = 1; j < s; ++j)
        chain.cycle[j] = chase_first(spec, r + j, s - j, alpha);
    // chain.cycle[j] is the letter at phase j: first(sigma_{r+j+1..r+s}(alpha))
    chain.entry.resize(entry);
    for (std::size_t k = entry; k > 0; --k) {
        Letter below = (k == entry) ? alpha : chain.entry[k];
        chain.entry[k - 1] = spec.at(k - 1).image(below)[0];
    }
    chain.letter_cycle = true;
    for (std::size_t j = 0; j < s && chain.letter_cycle; ++j) {
        Letter below = chain.cycle[(j + 1) % s];
        if (spec.at(r + j).image(below).size() != 1) chain.letter_cycle = false;
    }
    return limit_point_of_chain(spec, chain);
}

Word generate_prefix(const DirectiveSpec& spec, std::size_t n,
                     std::optional<Letter> seed) {
    LimitPoint lp = seed ? seed_limit_point(spec, *seed)
                         : limit_point_of_chain(spec, default_chain(spec));
    return lp.prefix(n);
}

} // namespace desub
