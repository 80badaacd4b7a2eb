#ifndef DESUB_REPORT_HPP
#define DESUB_REPORT_HPP

#include <map>
#include <string>

#include "json.hpp"

namespace desub {

/// Verdict semantics for properties of infinite words tested on finite
/// prefixes: a finite prefix can refute (Fails, with a witness an independent
/// checker can confirm) or stay inconclusive (Unknown). Finite-word
/// properties may also affirm (Holds).
struct ThreeValued {
    enum class Kind { Holds, Fails, Unknown };

    Kind kind = Kind::Unknown;
    std::string witness;  // human-readable evidence for Fails
    long long depth = 0;  // exploration depth/budget note for Unknown

    static ThreeValued holds() { return {Kind::Holds, {}, 0}; }
    static ThreeValued fails(std::string w) { return {Kind::Fails, std::move(w), 0}; }
    static ThreeValued unknown(long long depth = 0) { return {Kind::Unknown, {}, depth}; }

    bool is_holds() const { return kind == Kind::Holds; }
    bool is_fails() const { return kind == Kind::Fails; }
    bool is_unknown() const { return kind == Kind::Unknown; }

    std::string kind_name() const;
};

/// Verdict plus structured evidence and the parameters the check ran with.
struct PropertyReport {
    std::string property;
    ThreeValued verdict;
    std::map<std::string, long long> params;
    nlohmann::json witnesses = nlohmann::json::object();

    nlohmann::json to_json() const;
    std::string to_text() const;
};

} // namespace desub

#endif
