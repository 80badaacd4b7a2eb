#ifndef DESUB_STREAM_HPP
#define DESUB_STREAM_HPP

#include <functional>
#include <memory>
#include <string>

#include "desub/word.hpp"

namespace desub {

/// Lazy, deterministic prefix of a right infinite word. Letters are produced
/// on demand and cached; once emitted they never change. The stream holds a
/// read cursor and is single-consumer; a clone shares the cache but restarts
/// from position zero.
class PrefixStream {
public:
    /// Extends buf so that buf.size() >= need (the producer may overshoot).
    using Producer = std::function<void(std::string& buf, std::size_t need)>;

    PrefixStream(Alphabet alphabet, std::string origin, Producer produce);

    /// From an eventually periodic literal.
    static PrefixStream literal(const EventuallyPeriodicWord& w);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& origin() const { return origin_; }

    /// First n letters, as a word.
    Word prefix(std::size_t n);
    Letter next();
    std::size_t position() const { return cursor_; }

    PrefixStream clone() const;

private:
    void ensure(std::size_t n);

    Alphabet alphabet_;
    std::string origin_;
    Producer produce_;
    std::shared_ptr<std::string> cache_;
    std::size_t cursor_ = 0;
};

} // namespace desub

#endif
