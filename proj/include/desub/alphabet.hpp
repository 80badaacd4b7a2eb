#ifndef DESUB_ALPHABET_HPP
#define DESUB_ALPHABET_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "desub/error.hpp"

namespace desub {

using Letter = char;

constexpr std::size_t kMaxAlphabetSize = 26;

/// Finite ordered alphabet. Letters are single visible symbols; the order
/// given at construction is the total order used by lexicographic
/// comparisons everywhere else.
class Alphabet {
public:
    explicit Alphabet(std::string_view letters);

    std::size_t size() const { return letters_.size(); }
    bool contains(Letter c) const { return index_of(c) >= 0; }

    /// 0-based position of c in the order; throws if c is not a member.
    std::size_t index(Letter c) const;
    Letter at(std::size_t i) const;

    const std::string& letters() const { return letters_; }

    bool contains_word(std::string_view w) const;
    /// Throws Error naming `what` if some letter of w is not a member.
    void require_word(std::string_view w, std::string_view what) const;

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    int index_of(Letter c) const;
    std::string letters_;
};

} // namespace desub

#endif
