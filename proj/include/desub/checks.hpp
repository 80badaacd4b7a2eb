#ifndef DESUB_CHECKS_HPP
#define DESUB_CHECKS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "desub/report.hpp"
#include "desub/word.hpp"

namespace desub {

/// Balance of the given finite word (a finite-word property: Holds or Fails
/// with a same-length factor pair whose letter counts differ by 2). Two
/// routes are shipped: the pairwise oracle enumerates all same-length factor
/// pairs, the fast variant tracks per-length minimum and maximum window
/// counts. They must agree; tests enforce it.
PropertyReport is_balanced(const Word& w);
PropertyReport is_balanced_fast(const Word& w);
PropertyReport is_balanced_oracle(const Word& w);

/// Left special factors of each length 0..maxlen: factors with at least two
/// distinct left extension letters inside w.
std::map<std::size_t, std::set<std::string>> left_special_report(
    const Word& w, std::size_t maxlen);

/// Necessary conditions for a prefix of an episturmian word: at most one
/// left special factor per length, and factor set closed under reversal.
/// A missing reversal only counts when the factor's last occurrence ends at
/// least maxlen positions before the prefix end. Never Holds: the property
/// concerns the infinite word.
PropertyReport episturmian_necessary(const Word& w, std::size_t maxlen);

/// Fails when some left special factor of length <= maxlen is not a prefix
/// of w; otherwise Unknown.
PropertyReport is_LSP_prefixal(const Word& w, std::size_t maxlen);

/// Fails when some length-k factor of w[0..|w|-margin) occurs exactly once
/// in all of w; otherwise Unknown.
ThreeValued is_recurrent_bounded(const Word& w, std::size_t k, std::size_t margin);

/// Fails when some proper suffix is strictly smaller than w inside the
/// comparable window. Prefix ties stay Unknown: the infinite continuation
/// decides them.
ThreeValued is_lyndon_bounded(const Word& w);

/// Smallest (preperiod, period) whose periodic tail reaches the word end and
/// covers at least three repetitions; absent if none. Preperiod length is
/// minimized first, then period length.
std::optional<std::pair<std::size_t, Word>> detect_ultimate_period(const Word& w);

} // namespace desub

#endif
