#ifndef DESUB_LIMITS_HPP
#define DESUB_LIMITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "desub/directive.hpp"
#include "desub/stream.hpp"

namespace desub {

/// An eventually periodic sequence of letters (a_k) with
/// a_k = first(sigma_{k+1}(a_{k+1})) at every level: the letter skeleton of
/// one indefinite desubstitution of the spec. `entry` holds the letters up
/// to the first cycle position, `cycle` the letters of one cycle lap (its
/// length is a multiple of the spec period for in-period cycles).
/// `letter_cycle` is true when every image along the cycle is a single
/// letter; such a chain contributes a periodic limit word, every other chain
/// an expanding stream.
struct KonigChain {
    std::vector<Letter> entry;
    std::vector<Letter> cycle;
    bool letter_cycle = false;

    Letter at(std::size_t level) const {
        return level < entry.size()
                   ? entry[level]
                   : cycle[(level - entry.size()) % cycle.size()];
    }
    std::string signature() const;
};

/// One limit word of a directive sequence: either an eventually periodic
/// word known in closed form or an expanding stream of prefixes.
struct LimitPoint {
    std::optional<EventuallyPeriodicWord> periodic;
    std::optional<PrefixStream> stream;
    KonigChain chain;

    bool is_periodic() const { return periodic.has_value(); }
    /// First n letters either way.
    Word prefix(std::size_t n) const;
};

/// All canonical Konig chains of the spec: simple paths from level 0 into a
/// cycle of the (letter x phase) first-letter graph, then the cycle looped
/// forever. Deterministically ordered (periodic chains first, then by
/// letter signature). Requires a nonempty period.
std::vector<KonigChain> konig_chains(const DirectiveSpec& spec);

/// The limit words of the canonical chains, deduplicated. Never empty.
std::vector<LimitPoint> limit_points(const DirectiveSpec& spec);

/// Limit word along one specific chain of the spec.
LimitPoint limit_point_of_chain(const DirectiveSpec& spec, const KonigChain& chain);

/// Chain selected by default for generation and normalization: the first
/// letter-cycle chain if any exists, else the first expanding chain.
KonigChain default_chain(const DirectiveSpec& spec);

} // namespace desub

#endif
