#ifndef DESUB_GENERATOR_HPP
#define DESUB_GENERATOR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "desub/morphism.hpp"

namespace desub {

class MorphismTable;

/// Name of one elementary substitution: La, Rb, Eab, Pa, the identity, or a
/// reference to a named morphism loaded from elsewhere. Token tags are
/// case-insensitive; letters are taken literally.
struct GeneratorName {
    enum class Tag { L, R, E, P, Id, Named };

    Tag tag = Tag::Id;
    Letter a = 0;
    Letter b = 0;      // second letter of an exchange
    std::string id;    // Named

    static GeneratorName L(Letter alpha) { return {Tag::L, alpha, 0, {}}; }
    static GeneratorName R(Letter alpha) { return {Tag::R, alpha, 0, {}}; }
    static GeneratorName E(Letter alpha, Letter beta) { return {Tag::E, alpha, beta, {}}; }
    static GeneratorName P(Letter alpha) { return {Tag::P, alpha, 0, {}}; }
    static GeneratorName Id() { return {Tag::Id, 0, 0, {}}; }
    static GeneratorName Named(std::string name) { return {Tag::Named, 0, 0, std::move(name)}; }

    std::string token() const;
    static GeneratorName parse(std::string_view token);

    bool operator==(const GeneratorName& o) const = default;
};

/// Resolves generator names against an alphabet (and an optional table of
/// named morphisms).
Morphism resolve(const GeneratorName& g, const Alphabet& alphabet,
                 const MorphismTable* named = nullptr);
Morphism compose_all(const std::vector<GeneratorName>& gens,
                     const Alphabet& alphabet,
                     const MorphismTable* named = nullptr);

/// Named morphisms available to directive specs and substitution sets.
class MorphismTable {
public:
    void add(std::string name, Morphism m);
    const Morphism* find(std::string_view name) const;

private:
    std::vector<std::pair<std::string, Morphism>> entries_;
};

/// Certificate produced by the preservation classifiers. On Accept with no
/// residual, composing the factors in order reproduces the input exactly.
/// A residual carries the terminal morphism of the decomposition when it is
/// not itself an elementary generator (this happens only for the periodic
/// image class: all letter images powers of one letter).
struct GeneratorDecomposition {
    bool accepted = false;
    std::vector<GeneratorName> factors;
    std::optional<Morphism> residual;
    std::string reject_reason; // set when !accepted

    Morphism recompose(const Alphabet& alphabet) const;
};

/// Accept with a factor list over L u R u Exch u P composing to f, or
/// Reject. Works over any alphabet.
GeneratorDecomposition classify_episturmian_preserving(const Morphism& f);

/// Binary alphabets only: Accept with factors over {La, Lb, Ra, Rb, Eab}
/// composing to f, or Reject.
GeneratorDecomposition classify_sturmian_preserving(const Morphism& f);

/// Rewrites a generator word over L u R u Exch, pushing the exchanges to the
/// right with the commutation relations; the exchange tail is re-emitted as
/// a product of transpositions from the cycle decomposition of its value.
/// Composing lr then perm equals composing the input sequence.
std::pair<std::vector<GeneratorName>, std::vector<GeneratorName>>
canonical_LR_exch(const std::vector<GeneratorName>& seq, const Alphabet& alphabet);

/// Transposition word for a permutation morphism, anchored at the lowest
/// index letter of each cycle.
std::vector<GeneratorName> permutation_factors(const Morphism& perm);

std::string tokens_to_string(const std::vector<GeneratorName>& gens);

} // namespace desub

#endif
