#ifndef DESUB_ERROR_HPP
#define DESUB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace desub {

// Contract violations (bad letters, mismatched alphabets, malformed input).
// The CLI maps these to exit code 3.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace desub

#endif
