#include "desub/morphism.hpp"

#include <algorithm>

namespace desub {

Morphism::Morphism(Alphabet alphabet, std::map<Letter, std::string> images)
    : alphabet_(std::move(alphabet)) {
    images_.resize(alphabet_.size());
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        Letter c = alphabet_.at(i);
        auto it = images.find(c);
        if (it == images.end())
            throw Error(std::string("morphism: no image for letter '") + c + "'");
        if (it->second.empty())
            throw Error(std::string("morphism: erasing image for letter '") + c +
                        "' (images must be nonempty)");
        alphabet_.require_word(it->second, "morphism image");
        images_[i] = it->second;
    }
    if (images.size() != alphabet_.size())
        throw Error("morphism: image map mentions letters outside the alphabet");
}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        images[alphabet.at(i)] = std::string(1, alphabet.at(i));
    return Morphism(alphabet, std::move(images));
}

const std::string& Morphism::image(Letter c) const {
    return images_[alphabet_.index(c)];
}

std::string Morphism::apply(std::string_view w) const {
    std::string out;
    for (char c : w) out += images_[alphabet_.index(c)];
    return out;
}

Word Morphism::apply(const Word& w) const {
    if (w.alphabet() != alphabet_)
        throw Error("apply: word is over a different alphabet");
    return Word(alphabet_, apply(w.str()));
}

EventuallyPeriodicWord Morphism::apply(const EventuallyPeriodicWord& w) const {
    if (w.alphabet() != alphabet_)
        throw Error("apply: word is over a different alphabet");
    return EventuallyPeriodicWord(alphabet_, apply(w.preperiod()),
                                  apply(w.period()));
}

std::string Morphism::apply_prefix(std::string_view w, std::size_t cap) const {
    std::string out;
    for (char c : w) {
        if (out.size() >= cap) break;
        out += images_[alphabet_.index(c)];
    }
    if (out.size() > cap) out.resize(cap);
    return out;
}

std::size_t Morphism::norm() const {
    std::size_t n = 0;
    for (const auto& im : images_) n += im.size();
    return n;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.alphabet() != g.alphabet())
        throw Error("compose: morphisms live over different alphabets");
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < f.alphabet().size(); ++i) {
        Letter c = f.alphabet().at(i);
        images[c] = f.apply(g.image(c));
    }
    return Morphism(f.alphabet(), std::move(images));
}

Morphism make_L(const Alphabet& alphabet, Letter alpha) {
    alphabet.index(alpha);
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        Letter b = alphabet.at(i);
        images[b] = (b == alpha) ? std::string(1, alpha)
                                 : std::string{alpha, b};
    }
    return Morphism(alphabet, std::move(images));
}

Morphism make_R(const Alphabet& alphabet, Letter alpha) {
    alphabet.index(alpha);
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        Letter b = alphabet.at(i);
        images[b] = (b == alpha) ? std::string(1, alpha)
                                 : std::string{b, alpha};
    }
    return Morphism(alphabet, std::move(images));
}

Morphism make_E(const Alphabet& alphabet, Letter alpha, Letter beta) {
    alphabet.index(alpha);
    alphabet.index(beta);
    if (alpha == beta) throw Error("make_E: the two letters must differ");
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        Letter c = alphabet.at(i);
        Letter d = (c == alpha) ? beta : (c == beta) ? alpha : c;
        images[c] = std::string(1, d);
    }
    return Morphism(alphabet, std::move(images));
}

Morphism make_P(const Alphabet& alphabet, Letter alpha) {
    alphabet.index(alpha);
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        images[alphabet.at(i)] = std::string(1, alpha);
    return Morphism(alphabet, std::move(images));
}

std::vector<Letter> first_letter_map(const Morphism& f) {
    std::vector<Letter> out(f.alphabet().size());
    for (std::size_t i = 0; i < f.alphabet().size(); ++i)
        out[i] = f.image(f.alphabet().at(i))[0];
    return out;
}

bool is_permutation(const Morphism& f) {
    const Alphabet& a = f.alphabet();
    std::vector<bool> seen(a.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string& im = f.image(a.at(i));
        if (im.size() != 1) return false;
        std::size_t j = a.index(im[0]);
        if (seen[j]) return false;
        seen[j] = true;
    }
    return true;
}

std::optional<Letter> p_class_letter(const Morphism& f) {
    const Alphabet& a = f.alphabet();
    Letter alpha = f.image(a.at(0))[0];
    for (std::size_t i = 0; i < a.size(); ++i)
        for (char c : f.image(a.at(i)))
            if (c != alpha) return std::nullopt;
    return alpha;
}

std::optional<std::pair<Letter, Morphism>> peel_left(const Morphism& f) {
    const Alphabet& a = f.alphabet();
    Letter alpha = f.image(a.at(0))[0];
    for (std::size_t i = 1; i < a.size(); ++i)
        if (f.image(a.at(i))[0] != alpha) return std::nullopt;

    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string& im = f.image(a.at(i));
        std::string pre;
        std::size_t j = im.size();
        while (j > 0) {
            char c = im[j - 1];
            if (c != alpha) {
                if (j < 2 || im[j - 2] != alpha) return std::nullopt;
                pre += c;
                j -= 2;
            } else {
                pre += alpha;
                j -= 1;
            }
        }
        std::reverse(pre.begin(), pre.end());
        images[a.at(i)] = pre;
    }
    return std::make_pair(alpha, Morphism(a, std::move(images)));
}

std::optional<std::pair<Letter, Morphism>> peel_right(const Morphism& f) {
    const Alphabet& a = f.alphabet();
    Letter alpha = f.image(a.at(0)).back();
    for (std::size_t i = 1; i < a.size(); ++i)
        if (f.image(a.at(i)).back() != alpha) return std::nullopt;

    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string& im = f.image(a.at(i));
        std::string pre;
        std::size_t j = 0;
        while (j < im.size()) {
            char c = im[j];
            if (c != alpha) {
                if (j + 1 >= im.size() || im[j + 1] != alpha) return std::nullopt;
                pre += c;
                j += 2;
            } else {
                pre += alpha;
                j += 1;
            }
        }
        images[a.at(i)] = pre;
    }
    return std::make_pair(alpha, Morphism(a, std::move(images)));
}

} // namespace desub
