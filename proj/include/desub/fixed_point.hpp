#ifndef DESUB_FIXED_POINT_HPP
#define DESUB_FIXED_POINT_HPP

#include <set>
#include <string>
#include <vector>

#include "desub/morphism.hpp"
#include "desub/report.hpp"

namespace desub {

/// Which words can be indefinitely desubstituted by a single morphism: the
/// fixed points of f^pi. `pi` is the lcm of the first-letter cycle lengths,
/// never larger than the alphabet. Expanding seeds a generate the families
/// lim f^{n pi}(a); mortal letters satisfy f^pi(a) = a and may prefix any
/// fixed point or tile a purely periodic one.
struct FixedPointReport {
    std::size_t pi = 1;
    std::set<Letter> expanding_seeds;
    std::set<Letter> mortal_letters;
    std::vector<std::string> families; // human-readable descriptors

    std::string to_text() const;
};

FixedPointReport fixed_point_analysis(const Morphism& f);

/// Holds iff w = f^n(w) for some n in 1..#A, decided exactly on normalized
/// eventually periodic forms. The cap follows from the gcd argument: every
/// constituent period is at most #A.
ThreeValued is_fixed_by_power(const EventuallyPeriodicWord& w, const Morphism& f);

} // namespace desub

#endif
