#include "desub/stream.hpp"

namespace desub {

PrefixStream::PrefixStream(Alphabet alphabet, std::string origin,
                           Producer produce)
    : alphabet_(std::move(alphabet)),
      origin_(std::move(origin)),
      produce_(std::move(produce)),
      cache_(std::make_shared<std::string>()) {}

PrefixStream PrefixStream::literal(const EventuallyPeriodicWord& w) {
    return PrefixStream(w.alphabet(), "literal " + w.to_text(),
                        [w](std::string& buf, std::size_t need) {
                            while (buf.size() < need)
                                buf += w.letter_at(buf.size());
                        });
}

void PrefixStream::ensure(std::size_t n) {
    if (cache_->size() < n) {
        produce_(*cache_, n);
        if (cache_->size() < n)
            throw Error("prefix stream could not produce " + std::to_string(n) +
                        " letters (source: " + origin_ + ")");
    }
}

Word PrefixStream::prefix(std::size_t n) {
    ensure(n);
    return Word(alphabet_, cache_->substr(0, n));
}

Letter PrefixStream::next() {
    ensure(cursor_ + 1);
    return (*cache_)[cursor_++];
}

PrefixStream PrefixStream::clone() const {
    PrefixStream out(alphabet_, origin_, produce_);
    out.cache_ = cache_;
    return out;
}

} // namespace desub
