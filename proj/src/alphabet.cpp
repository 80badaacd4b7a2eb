#include "desub/alphabet.hpp"

namespace desub {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty())
        throw Error("alphabet must contain at least one letter");
    if (letters_.size() > kMaxAlphabetSize)
        throw Error("alphabet larger than " + std::to_string(kMaxAlphabetSize) +
                    " letters is not supported");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(letters_[i]);
        if (c <= ' ' || c >= 127)
            throw Error("alphabet letters must be visible ASCII symbols");
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw Error(std::string("duplicate letter '") + letters_[i] +
                            "' in alphabet");
    }
}

int Alphabet::index_of(Letter c) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == c) return static_cast<int>(i);
    return -1;
}

std::size_t Alphabet::index(Letter c) const {
    int i = index_of(c);
    if (i < 0)
        throw Error(std::string("letter '") + c + "' is not in alphabet {" +
                    letters_ + "}");
    return static_cast<std::size_t>(i);
}

Letter Alphabet::at(std::size_t i) const {
    if (i >= letters_.size()) throw Error("alphabet index out of range");
    return letters_[i];
}

bool Alphabet::contains_word(std::string_view w) const {
    for (char c : w)
        if (!contains(c)) return false;
    return true;
}

void Alphabet::require_word(std::string_view w, std::string_view what) const {
    for (char c : w)
        if (!contains(c))
            throw Error(std::string(what) + ": letter '" + c +
                        "' is not in alphabet {" + letters_ + "}");
}

} // namespace desub
