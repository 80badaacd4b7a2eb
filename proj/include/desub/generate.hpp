#ifndef DESUB_GENERATE_HPP
#define DESUB_GENERATE_HPP

#include <optional>

#include "desub/limits.hpp"

namespace desub {

/// The length-n prefix of the limit word of the directive sequence.
///
/// Without a seed the default chain is used (periodic limit words first,
/// then the least expanding chain), so outputs are reproducible. A seed
/// letter s selects the limit of sigma_1 ... sigma_k(s): following the
/// first-letter maps, the seed's orbit over one period must settle on a
/// fixed letter, whose chain then generates the word. Orbits that keep
/// oscillating admit no limit and raise an error with a diagnostic.
Word generate_prefix(const DirectiveSpec& spec, std::size_t n,
                     std::optional<Letter> seed = std::nullopt);

/// The limit point a seed selects (see generate_prefix).
LimitPoint seed_limit_point(const DirectiveSpec& spec, Letter seed);

} // namespace desub

#endif
