#include "desub/word.hpp"

#include <algorithm>

namespace desub {

Word::Word(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    alphabet_.require_word(letters_, "word");
}

Word Word::prefix(std::size_t n) const {
    return Word(alphabet_, letters_.substr(0, n));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size()) throw Error("substr position out of range");
    return Word(alphabet_, letters_.substr(pos, len));
}

EventuallyPeriodicWord::EventuallyPeriodicWord(Alphabet alphabet,
                                               std::string preperiod,
                                               std::string period)
    : alphabet_(std::move(alphabet)),
      pre_(std::move(preperiod)),
      per_(std::move(period)) {
    if (per_.empty()) throw Error("eventually periodic word needs a nonempty period");
    alphabet_.require_word(pre_, "preperiod");
    alphabet_.require_word(per_, "period");
}

namespace {

// Shortest u with w = u^k; the length of u is the least period that divides |w|.
std::string primitive_root(const std::string& w) {
    for (std::size_t d = 1; d <= w.size(); ++d) {
        if (w.size() % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < w.size() && ok; ++i)
            if (w[i] != w[i - d]) ok = false;
        if (ok) return w.substr(0, d);
    }
    return w;
}

} // namespace

EventuallyPeriodicWord EventuallyPeriodicWord::normalized() const {
    std::string pre = pre_;
    std::string per = primitive_root(per_);
    // pre x . (q x)^w  ==  pre . (x q)^w  whenever pre ends with x = last(per).
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
    return EventuallyPeriodicWord(alphabet_, pre, per);
}

Letter EventuallyPeriodicWord::letter_at(std::size_t i) const {
    if (i < pre_.size()) return pre_[i];
    return per_[(i - pre_.size()) % per_.size()];
}

bool EventuallyPeriodicWord::operator==(const EventuallyPeriodicWord& o) const {
    if (alphabet_ != o.alphabet_) return false;
    EventuallyPeriodicWord a = normalized();
    EventuallyPeriodicWord b = o.normalized();
    return a.pre_ == b.pre_ && a.per_ == b.per_;
}

std::string EventuallyPeriodicWord::to_text() const {
    return pre_ + " | " + per_;
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(const Alphabet& alphabet,
                                                     std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw Error("eventually periodic word must use 'pre | period' syntax");
    auto strip = [](std::string_view s) {
        std::string out;
        for (char c : s)
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
        return out;
    };
    std::string pre = strip(text.substr(0, bar));
    std::string per = strip(text.substr(bar + 1));
    return EventuallyPeriodicWord(alphabet, pre, per);
}

std::string to_string(LexOrder o) {
    switch (o) {
        case LexOrder::Less: return "LT";
        case LexOrder::Equal: return "EQ";
        case LexOrder::Greater: return "GT";
        case LexOrder::StrictPrefixOf: return "StrictPrefixOf";
        case LexOrder::StrictExtensionOf: return "StrictExtensionOf";
    }
    return "?";
}

std::set<std::string> factor_set(const Word& w, std::size_t k) {
    std::set<std::string> out;
    if (k > w.size()) return out;
    for (std::size_t i = 0; i + k <= w.size(); ++i)
        out.insert(w.str().substr(i, k));
    return out;
}

std::vector<std::size_t> abelian_vector(const Word& w) {
    std::vector<std::size_t> counts(w.alphabet().size(), 0);
    for (char c : w.str()) counts[w.alphabet().index(c)]++;
    return counts;
}

LexOrder lex_compare(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw Error("lex_compare: words live over different alphabets");
    const Alphabet& a = u.alphabet();
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t iu = a.index(u[i]), iv = a.index(v[i]);
        if (iu < iv) return LexOrder::Less;
        if (iu > iv) return LexOrder::Greater;
    }
    if (u.size() == v.size()) return LexOrder::Equal;
    return u.size() < v.size() ? LexOrder::StrictPrefixOf
                               : LexOrder::StrictExtensionOf;
}

std::size_t smallest_period(const Word& w) {
    if (w.empty()) throw Error("smallest_period: word must be nonempty");
    const std::string& s = w.str();
    // Failure function; the smallest period is n - border(n).
    std::vector<std::size_t> fail(s.size() + 1, 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t j = fail[i];
        while (j > 0 && s[i] != s[j]) j = fail[j];
        if (s[i] == s[j]) ++j;
        fail[i + 1] = j;
    }
    return s.size() - fail[s.size()];
}

Word expand(const EventuallyPeriodicWord& w, std::size_t n) {
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out += w.letter_at(i);
    return Word(w.alphabet(), std::move(out));
}

} // namespace desub
