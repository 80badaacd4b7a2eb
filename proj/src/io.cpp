#include "desub/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace desub {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Morphism parse_morphism(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::string alphabet_letters;
    std::map<Letter, std::string> images;
    while (std::getline(in, line)) {
        // strip comments and whitespace-only lines
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "alphabet:") {
            std::string tok;
            while (ls >> tok) alphabet_letters += tok;
            continue;
        }
        std::string arrow, image;
        if (!(ls >> arrow >> image) || arrow != "->" || first.size() != 1)
            throw Error("bad morphism line: '" + line + "'");
        if (images.count(first[0]))
            throw Error(std::string("duplicate image for letter '") + first[0] + "'");
        images[first[0]] = image;
    }
    if (alphabet_letters.empty())
        throw Error("morphism file is missing an 'alphabet:' line");
    return Morphism(Alphabet(alphabet_letters), std::move(images));
}

std::string morphism_to_text(const Morphism& m) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : m.alphabet().letters()) out << ' ' << c;
    out << '\n';
    for (char c : m.alphabet().letters())
        out << c << " -> " << m.image(c) << '\n';
    return out.str();
}

Morphism load_morphism_file(const std::string& path) {
    return parse_morphism(read_file(path));
}

Alphabet inferred_alphabet(std::string_view letters) {
    std::string distinct;
    for (char c : letters)
        if (distinct.find(c) == std::string::npos) distinct += c;
    std::sort(distinct.begin(), distinct.end());
    if (distinct.empty())
        throw Error("cannot infer an alphabet from an empty word");
    return Alphabet(distinct);
}

std::variant<Word, EventuallyPeriodicWord> parse_word_text(std::string_view text) {
    std::string trimmed(text);
    while (!trimmed.empty() &&
           (trimmed.back() == '\n' || trimmed.back() == '\r' ||
            trimmed.back() == ' ' || trimmed.back() == '\t'))
        trimmed.pop_back();
    std::size_t start = 0;
    while (start < trimmed.size() &&
           (trimmed[start] == ' ' || trimmed[start] == '\t'))
        ++start;
    trimmed = trimmed.substr(start);
    if (trimmed.find('|') != std::string::npos) {
        std::string letters;
        for (char c : trimmed)
            if (c != '|' && c != ' ' && c != '\t') letters += c;
        return EventuallyPeriodicWord::parse(inferred_alphabet(letters), trimmed);
    }
    return Word(inferred_alphabet(trimmed), trimmed);
}

std::variant<Word, EventuallyPeriodicWord> load_word_file(const std::string& path) {
    return parse_word_text(read_file(path));
}

SubstitutionSet load_set_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    SubstitutionSet set;
    set.name = dir;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("set directory '" + dir + "' is empty");
    bool first = true;
    for (const auto& f : files) {
        Morphism m = load_morphism_file(f.string());
        if (first) {
            set.alphabet = m.alphabet();
            first = false;
        }
        set.add(f.stem().string(), std::move(m));
    }
    set.sort_members();
    return set;
}

SubstitutionSet load_set(const std::string& designator, const Alphabet& alphabet) {
    if (designator.find(',') != std::string::npos ||
        GeneratorName::parse(designator).tag != GeneratorName::Tag::Named) {
        SubstitutionSet set;
        set.name = designator;
        set.alphabet = alphabet;
        std::string tok;
        std::istringstream in(designator);
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            GeneratorName g = GeneratorName::parse(tok);
            if (g.tag == GeneratorName::Tag::Named)
                throw Error("unknown generator token '" + tok + "' in set");
            set.add(g.token(), resolve(g, alphabet));
        }
        set.sort_members();
        return set;
    }
    if (std::filesystem::is_directory(designator)) return load_set_dir(designator);
    FamilyDescriptor fam = FamilyDescriptor::parse(designator, alphabet);
    return family_members(fam);
}

} // namespace desub
