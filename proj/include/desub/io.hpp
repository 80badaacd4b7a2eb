#ifndef DESUB_IO_HPP
#define DESUB_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "desub/directive.hpp"
#include "desub/families.hpp"
#include "desub/word.hpp"

namespace desub {

/// Morphism text format:
///   alphabet: a b
///   a -> ab
///   b -> a
Morphism parse_morphism(std::string_view text);
std::string morphism_to_text(const Morphism& m);
Morphism load_morphism_file(const std::string& path);

/// Word files hold one word (letters as characters, optional trailing
/// newline) or an eventually periodic word written "pre | period".
std::variant<Word, EventuallyPeriodicWord> parse_word_text(std::string_view text);
std::variant<Word, EventuallyPeriodicWord> load_word_file(const std::string& path);

/// Alphabet of a bare word: its distinct letters in ascending order.
Alphabet inferred_alphabet(std::string_view letters);

/// A substitution set from a builtin family name ("Sbal", "SLynd:3", ...),
/// from comma-separated generator tokens ("La,Lb"), or from a directory of
/// morphism files (member names are the file stems).
SubstitutionSet load_set(const std::string& designator, const Alphabet& alphabet);
SubstitutionSet load_set_dir(const std::string& dir);

std::string read_file(const std::string& path);

} // namespace desub

#endif
