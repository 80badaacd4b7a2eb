#ifndef DESUB_WORD_HPP
#define DESUB_WORD_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "desub/alphabet.hpp"

namespace desub {

/// Finite word over a fixed alphabet. Letters are stored densely; the empty
/// word is permitted. Immutable after construction.
class Word {
public:
    Word(Alphabet alphabet, std::string letters);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word prefix(std::size_t n) const;
    Word substr(std::size_t pos, std::size_t len) const;

    bool operator==(const Word& o) const {
        return alphabet_ == o.alphabet_ && letters_ == o.letters_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }

private:
    Alphabet alphabet_;
    std::string letters_;
};

/// preperiod . period^omega with a nonempty period. Equality is decided on
/// the normal form: the period is shifted into its primitive rotation and the
/// preperiod is shrunk as far as possible.
class EventuallyPeriodicWord {
public:
    EventuallyPeriodicWord(Alphabet alphabet, std::string preperiod,
                           std::string period);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& preperiod() const { return pre_; }
    const std::string& period() const { return per_; }

    EventuallyPeriodicWord normalized() const;
    Letter letter_at(std::size_t i) const;

    /// Normal-form comparison: u == v iff they denote the same infinite word.
    bool operator==(const EventuallyPeriodicWord& o) const;
    bool operator!=(const EventuallyPeriodicWord& o) const { return !(*this == o); }

    /// "pre | period" (pre may be empty: "| period").
    std::string to_text() const;
    static EventuallyPeriodicWord parse(const Alphabet& alphabet,
                                        std::string_view text);

private:
    Alphabet alphabet_;
    std::string pre_, per_;
};

enum class LexOrder { Less, Equal, Greater, StrictPrefixOf, StrictExtensionOf };

std::string to_string(LexOrder o);

/// All distinct length-k factors of w (k > |w| yields the empty set).
std::set<std::string> factor_set(const Word& w, std::size_t k);

/// Occurrence count per letter, indexed by alphabet position. Letters absent
/// from w report zero.
std::vector<std::size_t> abelian_vector(const Word& w);

/// Lexicographic comparison in the alphabet order, with the two proper
/// prefix cases distinguished. Both words must live over the same alphabet.
LexOrder lex_compare(const Word& u, const Word& v);

/// Least p >= 1 with w[i] == w[i+p] for all valid i. Requires |w| >= 1.
std::size_t smallest_period(const Word& w);

/// First n letters of preperiod . period^omega.
Word expand(const EventuallyPeriodicWord& w, std::size_t n);

} // namespace desub

#endif
