#ifndef DESUB_DIRECTIVE_HPP
#define DESUB_DIRECTIVE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "desub/generator.hpp"

namespace desub {

/// Eventually periodic sequence of named substitutions: preperiod followed
/// by an infinitely repeated period. An empty period makes the spec
/// finite-only; operations that unroll the sequence indefinitely require a
/// nonempty period.
class DirectiveSpec {
public:
    DirectiveSpec(Alphabet alphabet, std::vector<GeneratorName> preperiod,
                  std::vector<GeneratorName> period,
                  const MorphismTable* named = nullptr);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<GeneratorName>& preperiod_names() const { return pre_names_; }
    const std::vector<GeneratorName>& period_names() const { return per_names_; }
    std::size_t preperiod_size() const { return pre_names_.size(); }
    std::size_t period_size() const { return per_names_.size(); }
    bool has_period() const { return !per_names_.empty(); }

    /// sigma_{k+1}: the substitution applied between level k+1 and level k.
    const Morphism& at(std::size_t k) const;
    const GeneratorName& name_at(std::size_t k) const;

    /// The spec seen from level k: preperiod elements consumed, period rotated.
    DirectiveSpec suffix(std::size_t k) const;

    /// Grammar: whitespace-separated tokens, period in parentheses with a
    /// ^w suffix, e.g. "La Rb (La Lb)^w". Empty preperiod allowed.
    static DirectiveSpec parse(const Alphabet& alphabet, std::string_view text,
                               const MorphismTable* named = nullptr);
    std::string to_text() const;

private:
    struct Raw {};
    DirectiveSpec(Raw, Alphabet alphabet, std::vector<GeneratorName> pre_names,
                  std::vector<GeneratorName> per_names, std::vector<Morphism> pre,
                  std::vector<Morphism> per);

    Alphabet alphabet_;
    std::vector<GeneratorName> pre_names_, per_names_;
    std::vector<Morphism> pre_, per_;
};

/// Finite named collection of substitutions over one alphabet, kept sorted
/// by member name.
struct SubstitutionSet {
    std::string name;
    Alphabet alphabet{"ab"};
    std::vector<std::pair<std::string, Morphism>> members;

    void add(std::string member_name, Morphism m);
    void sort_members();
};

} // namespace desub

#endif
