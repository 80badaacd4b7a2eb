#ifndef DESUB_DESUB_HPP
#define DESUB_DESUB_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "desub/directive.hpp"
#include "desub/morphism.hpp"

namespace desub {

/// One way of reading w as the image of a shorter word: w = sigma(preimage)
/// followed by a residue that is either empty or a proper prefix of some
/// letter image (the input is a prefix of an infinite word, so the final
/// image may be cut off). `consumed` is the length of sigma(preimage).
struct Parse {
    std::string preimage;
    std::size_t consumed = 0;

    bool operator<(const Parse& o) const {
        return preimage != o.preimage ? preimage < o.preimage
                                      : consumed < o.consumed;
    }
    bool operator==(const Parse& o) const = default;
};

/// All parses of w against sigma, found by backtracking over the code
/// {sigma(x) : x in A}. The code need not be uniquely decodable; every parse
/// is returned. An empty result means w cannot be read as a sigma-image.
std::set<Parse> desubstitute_prefix(const Word& w, const Morphism& sigma);

/// Exact factorizations only: w = sigma(preimage) with no residue.
std::set<std::string> desubstitute_exact(std::string_view w, const Morphism& sigma);

struct DesubNode {
    int depth = 0;
    std::string morphism;
    std::string preimage;
    std::size_t consumed = 0;
    std::vector<DesubNode> children;
};

struct DesubTree {
    std::string root;
    int requested_depth = 0;
    bool truncated = false;      // node budget ran out before full exploration
    std::size_t node_count = 0;
    std::vector<DesubNode> children;

    bool empty() const { return children.empty(); }
    int deepest() const;
    bool has_full_depth_chain() const;

    std::string render_indented() const;
    /// One node per line: depth, morphism, preimage, consumed.
    std::string render_lines() const;
    nlohmann::json to_json() const;
    static DesubTree from_json(const nlohmann::json& j);
};

constexpr std::size_t kDefaultParseBudget = 1'000'000;

/// Tree of all chains sigma_1 ... sigma_d (d <= depth) with a nonempty
/// preimage at every level. Children are ordered by morphism name, then by
/// preimage. Exceeding the node budget flags the tree truncated; nothing is
/// dropped silently.
DesubTree directive_parses(const Word& w, const SubstitutionSet& s, int depth,
                           std::size_t budget = kDefaultParseBudget);

/// One desubstitution step for a balanced binary word, by the four-row table
/// keyed on (first letter, which of aa/bb is absent). When both squares are
/// absent the L-row of the first letter is chosen. Throws if both occur.
std::pair<GeneratorName, std::string> balanced_desub_step(const Word& w);

} // namespace desub

#endif
