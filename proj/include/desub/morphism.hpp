#ifndef DESUB_MORPHISM_HPP
#define DESUB_MORPHISM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desub/word.hpp"

namespace desub {

/// Nonerasing endomorphism of the free monoid over a fixed alphabet.
/// Completely defined by the letter images; every image is nonempty and
/// stays inside the alphabet.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::map<Letter, std::string> images);

    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& image(Letter c) const;

    std::string apply(std::string_view w) const;
    Word apply(const Word& w) const;
    EventuallyPeriodicWord apply(const EventuallyPeriodicWord& w) const;
    /// First cap letters of the image; sound for prefix work because the
    /// morphism is nonerasing.
    std::string apply_prefix(std::string_view w, std::size_t cap) const;

    /// Sum of the image lengths.
    std::size_t norm() const;

    bool operator==(const Morphism& o) const {
        return alphabet_ == o.alphabet_ && images_ == o.images_;
    }
    bool operator!=(const Morphism& o) const { return !(*this == o); }

private:
    Alphabet alphabet_;
    std::vector<std::string> images_; // by alphabet index
};

/// (f . g)(x) = f(g(x)); both over the same alphabet.
Morphism compose(const Morphism& f, const Morphism& g);

/// alpha -> alpha, beta -> alpha beta for beta != alpha.
Morphism make_L(const Alphabet& alphabet, Letter alpha);
/// alpha -> alpha, beta -> beta alpha for beta != alpha.
Morphism make_R(const Alphabet& alphabet, Letter alpha);
/// Exchange of two distinct letters; everything else fixed.
Morphism make_E(const Alphabet& alphabet, Letter alpha, Letter beta);
/// Every letter maps to the single letter alpha.
Morphism make_P(const Alphabet& alphabet, Letter alpha);

/// alpha -> first letter of f(alpha), indexed by alphabet position.
std::vector<Letter> first_letter_map(const Morphism& f);

/// True iff the letter images are single letters forming the whole alphabet.
bool is_permutation(const Morphism& f);

/// The letter a when every image lies in a+, otherwise absent.
std::optional<Letter> p_class_letter(const Morphism& f);

/// If all images start with a common letter alpha and decode over the code
/// {alpha} u {alpha beta : beta != alpha} (a suffix code, decoded right to
/// left), returns (alpha, g) with f = L_alpha . g.
std::optional<std::pair<Letter, Morphism>> peel_left(const Morphism& f);

/// Symmetric: prefix code {alpha} u {beta alpha : beta != alpha}, decoded
/// left to right; on success f = R_alpha . g.
std::optional<std::pair<Letter, Morphism>> peel_right(const Morphism& f);

} // namespace desub

#endif
