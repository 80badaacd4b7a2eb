#include "desub/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace desub {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

void require_binary(const FamilyDescriptor& fam) {
    if (fam.alphabet.size() != 2)
        throw Error(fam.name() + " is defined over a binary alphabet");
}

void require_at_least_two(const FamilyDescriptor& fam) {
    if (fam.alphabet.size() < 2)
        throw Error(fam.name() + " needs an alphabet of at least two letters");
}

void add_word(SubstitutionSet& set, const std::vector<GeneratorName>& word) {
    std::string name;
    for (const auto& g : word) name += g.token();
    Morphism value = compose_all(word, set.alphabet);
    set.add(std::move(name), std::move(value));
}

// All generator words of length len over the given atoms, filtered.
void enumerate_words(SubstitutionSet& set, const std::vector<GeneratorName>& atoms,
                     std::size_t max_len,
                     const std::function<bool(const std::vector<GeneratorName>&)>& keep) {
    std::vector<GeneratorName> word;
    std::function<void()> walk = [&]() {
        if (!word.empty() && keep(word)) add_word(set, word);
        if (word.size() == max_len) return;
        for (const auto& g : atoms) {
            word.push_back(g);
            walk();
            word.pop_back();
        }
    };
    walk();
}

} // namespace

std::string FamilyDescriptor::name() const {
    switch (tag) {
        case FamilyTag::Sbal: return "Sbal";
        case FamilyTag::SSturm: return "SSturm:" + std::to_string(bound);
        case FamilyTag::SLynd: return "SLynd:" + std::to_string(bound);
        case FamilyTag::Lfam: return "Lfam";
        case FamilyTag::Rfam: return "Rfam";
        case FamilyTag::LRfam: return "LRfam";
        case FamilyTag::RstarL: return "RstarL:" + std::to_string(bound);
        case FamilyTag::LStrictStand: return "LStrictStand:" + std::to_string(bound);
        case FamilyTag::Sstrictepi: return "Sstrictepi:" + std::to_string(bound);
    }
    return "?";
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view text, Alphabet alphabet) {
    std::string t = lower(text);
    std::size_t bound = 3;
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        bound = static_cast<std::size_t>(std::stoul(t.substr(colon + 1)));
        if (bound < 1) throw Error("family bound must be >= 1");
        t = t.substr(0, colon);
    }
    FamilyDescriptor fam{FamilyTag::Sbal, std::move(alphabet), bound};
    if (t == "sbal") fam.tag = FamilyTag::Sbal;
    else if (t == "ssturm") fam.tag = FamilyTag::SSturm;
    else if (t == "slynd") fam.tag = FamilyTag::SLynd;
    else if (t == "lfam") fam.tag = FamilyTag::Lfam;
    else if (t == "rfam") fam.tag = FamilyTag::Rfam;
    else if (t == "lrfam") fam.tag = FamilyTag::LRfam;
    else if (t == "rstarl") fam.tag = FamilyTag::RstarL;
    else if (t == "lstrictstand") fam.tag = FamilyTag::LStrictStand;
    else if (t == "sstrictepi") fam.tag = FamilyTag::Sstrictepi;
    else throw Error("unknown family '" + std::string(text) + "'");
    return fam;
}

SubstitutionSet family_members(const FamilyDescriptor& fam) {
    SubstitutionSet set;
    set.name = fam.name();
    set.alphabet = fam.alphabet;
    const Alphabet& A = fam.alphabet;

    std::vector<GeneratorName> L_atoms, R_atoms, LR_atoms;
    for (std::size_t i = 0; i < A.size(); ++i) {
        L_atoms.push_back(GeneratorName::L(A.at(i)));
        R_atoms.push_back(GeneratorName::R(A.at(i)));
    }
    LR_atoms = L_atoms;
    LR_atoms.insert(LR_atoms.end(), R_atoms.begin(), R_atoms.end());

    switch (fam.tag) {
        case FamilyTag::Sbal: {
            require_binary(fam);
            Letter a = A.at(0), b = A.at(1);
            add_word(set, {GeneratorName::L(a)});
            add_word(set, {GeneratorName::R(a)});
            add_word(set, {GeneratorName::L(b)});
            add_word(set, {GeneratorName::R(b)});
            break;
        }
        case FamilyTag::SSturm: {
            require_binary(fam);
            Letter a = A.at(0), b = A.at(1);
            auto type_of = [&](const GeneratorName& g) { return g.a; };
            enumerate_words(set, LR_atoms, fam.bound + 1,
                            [&](const std::vector<GeneratorName>& w) {
                                if (w.size() < 2) return false;
                                Letter head = type_of(w.front());
                                Letter tail = type_of(w.back());
                                if (head == tail) return false;
                                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                                    if (type_of(w[i]) != head) return false;
                                (void)a; (void)b;
                                return true;
                            });
            break;
        }
        case FamilyTag::SLynd: {
            require_binary(fam);
            Letter a = A.at(0), b = A.at(1);
            for (std::size_t n = 1; n <= fam.bound; ++n) {
                std::vector<GeneratorName> w1(n, GeneratorName::L(a));
                w1.push_back(GeneratorName::R(b));
                add_word(set, w1);
                std::vector<GeneratorName> w2(n, GeneratorName::R(b));
                w2.push_back(GeneratorName::L(a));
                add_word(set, w2);
            }
            break;
        }
        case FamilyTag::Lfam:
            require_at_least_two(fam);
            for (const auto& g : L_atoms) add_word(set, {g});
            break;
        case FamilyTag::Rfam:
            require_at_least_two(fam);
            for (const auto& g : R_atoms) add_word(set, {g});
            break;
        case FamilyTag::LRfam:
            require_at_least_two(fam);
            for (const auto& g : LR_atoms) add_word(set, {g});
            break;
        case FamilyTag::RstarL: {
            require_at_least_two(fam);
            enumerate_words(set, LR_atoms, fam.bound + 1,
                            [](const std::vector<GeneratorName>& w) {
                                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                                    if (w[i].tag != GeneratorName::Tag::R) return false;
                                return w.back().tag == GeneratorName::Tag::L;
                            });
            break;
        }
        case FamilyTag::LStrictStand: {
            require_at_least_two(fam);
            enumerate_words(set, L_atoms, fam.bound + A.size() - 1,
                            [&](const std::vector<GeneratorName>& w) {
                                std::set<Letter> seen;
                                for (const auto& g : w) seen.insert(g.a);
                                if (seen.size() != A.size()) return false;
                                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                                    if (w[i].a == w.back().a) return false;
                                return true;
                            });
            break;
        }
        case FamilyTag::Sstrictepi: {
            require_at_least_two(fam);
            enumerate_words(set, LR_atoms, fam.bound + A.size() - 1,
                            [&](const std::vector<GeneratorName>& w) {
                                bool has_L = false;
                                std::set<Letter> covered;
                                for (const auto& g : w) {
                                    if (g.tag == GeneratorName::Tag::L) has_L = true;
                                    covered.insert(g.a);
                                }
                                return has_L && covered.size() == A.size();
                            });
            break;
        }
    }
    set.sort_members();
    return set;
}

ValidationResult validate_directive_for_family(const DirectiveSpec& spec,
                                               const FamilyDescriptor& fam) {
    const Alphabet& A = fam.alphabet;
    if (spec.alphabet() != A)
        return {false, "directive and family alphabets differ"};
    if (!spec.has_period())
        return {false, "directive has no period; the family conditions "
                       "constrain the infinite tail"};

    auto is_L = [](const GeneratorName& g) { return g.tag == GeneratorName::Tag::L; };
    auto is_R = [](const GeneratorName& g) { return g.tag == GeneratorName::Tag::R; };
    auto all_gens = spec.preperiod_names();
    all_gens.insert(all_gens.end(), spec.period_names().begin(),
                    spec.period_names().end());

    auto universe_LR = [&]() -> ValidationResult {
        for (const auto& g : all_gens)
            if (!is_L(g) && !is_R(g))
                return {false, "generator " + g.token() + " is not an L or R form"};
        return {true, {}};
    };

    switch (fam.tag) {
        case FamilyTag::Sbal: {
            if (A.size() != 2) return {false, "Sbal is binary"};
            if (auto u = universe_LR(); !u.ok) return u;
            return {true, "all generators in {La, Ra, Lb, Rb}"};
        }
        case FamilyTag::SSturm: {
            if (A.size() != 2) return {false, "SSturm is binary"};
            if (auto u = universe_LR(); !u.ok) return u;
            Letter a = A.at(0), b = A.at(1);
            bool has_a = false, has_b = false;
            for (const auto& g : spec.period_names()) {
                if (g.a == a) has_a = true;
                if (g.a == b) has_b = true;
            }
            if (!has_a)
                return {false, std::string("no ") + a + "-type generator in period"};
            if (!has_b)
                return {false, std::string("no ") + b + "-type generator in period"};
            return {true, "period mixes a-type and b-type generators"};
        }
        case FamilyTag::SLynd: {
            if (A.size() != 2) return {false, "SLynd is binary"};
            Letter a = A.at(0), b = A.at(1);
            for (const auto& g : all_gens) {
                bool ok = (is_L(g) && g.a == a) || (is_R(g) && g.a == b);
                if (!ok)
                    return {false, "generator " + g.token() + " is outside {L" +
                                       std::string(1, a) + ", R" +
                                       std::string(1, b) + "}"};
            }
            bool has_L = false, has_R = false;
            for (const auto& g : spec.period_names()) {
                if (is_L(g)) has_L = true;
                if (is_R(g)) has_R = true;
            }
            if (!has_L || !has_R)
                return {false, "period must mix L" + std::string(1, a) + " and R" +
                                   std::string(1, b) + " blocks"};
            return {true, "period factors into L-then-R blocks"};
        }
        case FamilyTag::Lfam: {
            for (const auto& g : all_gens)
                if (!is_L(g))
                    return {false, "generator " + g.token() + " is not an L form"};
            return {true, "all generators in the L family"};
        }
        case FamilyTag::Rfam: {
            for (const auto& g : all_gens)
                if (!is_R(g))
                    return {false, "generator " + g.token() + " is not an R form"};
            return {true, "all generators in the R family"};
        }
        case FamilyTag::LRfam: {
            if (auto u = universe_LR(); !u.ok) return u;
            return {true, "all generators in L u R"};
        }
        case FamilyTag::RstarL: {
            if (auto u = universe_LR(); !u.ok) return u;
            bool has_L = false;
            for (const auto& g : spec.period_names())
                if (is_L(g)) has_L = true;
            if (!has_L) return {false, "period has no L element: blocks R*L "
                                       "cannot cover the tail"};
            return {true, "every block is an R-word followed by one L"};
        }
        case FamilyTag::LStrictStand: {
            for (const auto& g : all_gens)
                if (!is_L(g))
                    return {false, "generator " + g.token() + " is not an L form"};
            std::set<Letter> seen;
            for (const auto& g : spec.period_names()) seen.insert(g.a);
            if (seen.size() != A.size())
                return {false, "period misses some L_alpha: every letter must "
                               "recur infinitely often"};
            return {true, "period contains every L_alpha"};
        }
        case FamilyTag::Sstrictepi: {
            if (auto u = universe_LR(); !u.ok) return u;
            bool has_L = false;
            std::set<Letter> covered;
            for (const auto& g : spec.period_names()) {
                if (is_L(g)) has_L = true;
                covered.insert(g.a);
            }
            if (!has_L) return {false, "period has no L element"};
            if (covered.size() != A.size())
                return {false, "period misses some letter: every letter needs "
                               "an L or R form infinitely often"};
            return {true, "period has an L and touches every letter"};
        }
    }
    return {false, "unhandled family"};
}

} // namespace desub
