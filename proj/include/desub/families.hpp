#ifndef DESUB_FAMILIES_HPP
#define DESUB_FAMILIES_HPP

#include <string>
#include <string_view>

#include "desub/directive.hpp"

namespace desub {

/// The named substitution families. Finite ones (Sbal, Lfam, Rfam, LRfam)
/// ignore the bound; parametric ones are materialized up to it: the bound is
/// the largest repeat exponent n of the family shape (SLynd: L_a^n R_b and
/// R_b^n L_a; the block families admit generator words of length up to
/// bound + #A - 1).
enum class FamilyTag {
    Sbal,         // {La, Ra, Lb, Rb}, binary
    SSturm,       // {La,Ra}+{Lb,Rb} u {Lb,Rb}+{La,Ra}, binary
    SLynd,        // {La^n Rb, Rb^n La | n >= 1}, binary, ordered a < b
    Lfam,         // {L_alpha}
    Rfam,         // {R_alpha}
    LRfam,        // L u R
    RstarL,       // R* L blocks
    LStrictStand, // L-words containing every L_alpha, fresh last letter
    Sstrictepi,   // (L u R)-words with an L and a {L_alpha,R_alpha} per letter
};

struct FamilyDescriptor {
    FamilyTag tag;
    Alphabet alphabet{"ab"};
    std::size_t bound = 3; // repeat exponent for parametric families

    std::string name() const;
    /// "Sbal", "SLynd:3", "LStrictStand:2", ... (case-insensitive tag).
    static FamilyDescriptor parse(std::string_view text, Alphabet alphabet);
};

/// Materialize the family as a finite substitution set. Members are named by
/// their generator tokens.
SubstitutionSet family_members(const FamilyDescriptor& fam);

struct ValidationResult {
    bool ok = false;
    std::string reason;
};

/// Does the (eventually periodic) directive match the family's shape and
/// frequency conditions? Checked on the period: e.g. SSturm needs an a-type
/// and a b-type generator per period; RstarL needs an L per period;
/// LStrictStand needs every L_alpha per period.
ValidationResult validate_directive_for_family(const DirectiveSpec& spec,
                                               const FamilyDescriptor& fam);

} // namespace desub

#endif
