#include "desub/generator.hpp"

#include <algorithm>
#include <cctype>

namespace desub {

std::string GeneratorName::token() const {
    switch (tag) {
        case Tag::L: return std::string("L") + a;
        case Tag::R: return std::string("R") + a;
        case Tag::E: return std::string("E") + a + b;
        case Tag::P: return std::string("P") + a;
        case Tag::Id: return "id";
        case Tag::Named: return id;
    }
    return "?";
}

GeneratorName GeneratorName::parse(std::string_view token) {
    if (token.empty()) throw Error("empty generator token");
    std::string lower(token);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "id") return Id();
    char tag = lower[0];
    if ((tag == 'l' || tag == 'r' || tag == 'p') && token.size() == 2)
        return {tag == 'l' ? Tag::L : tag == 'r' ? Tag::R : Tag::P,
                token[1], 0, {}};
    if (tag == 'e' && token.size() == 3) return E(token[1], token[2]);
    return Named(std::string(token));
}

void MorphismTable::add(std::string name, Morphism m) {
    for (auto& [n, _] : entries_)
        if (n == name) throw Error("duplicate morphism name '" + name + "'");
    entries_.emplace_back(std::move(name), std::move(m));
}

const Morphism* MorphismTable::find(std::string_view name) const {
    for (auto& [n, m] : entries_)
        if (n == name) return &m;
    return nullptr;
}

Morphism resolve(const GeneratorName& g, const Alphabet& alphabet,
                 const MorphismTable* named) {
    switch (g.tag) {
        case GeneratorName::Tag::L: return make_L(alphabet, g.a);
        case GeneratorName::Tag::R: return make_R(alphabet, g.a);
        case GeneratorName::Tag::E: return make_E(alphabet, g.a, g.b);
        case GeneratorName::Tag::P: return make_P(alphabet, g.a);
        case GeneratorName::Tag::Id: return Morphism::identity(alphabet);
        case GeneratorName::Tag::Named: {
            if (named)
                if (const Morphism* m = named->find(g.id)) {
                    if (m->alphabet() != alphabet)
                        throw Error("morphism '" + g.id +
                                    "' is over a different alphabet");
                    return *m;
                }
            throw Error("unknown morphism name '" + g.id + "'");
        }
    }
    throw Error("unreachable");
}

Morphism compose_all(const std::vector<GeneratorName>& gens,
                     const Alphabet& alphabet, const MorphismTable* named) {
    Morphism acc = Morphism::identity(alphabet);
    for (const auto& g : gens) acc = compose(acc, resolve(g, alphabet, named));
    return acc;
}

Morphism GeneratorDecomposition::recompose(const Alphabet& alphabet) const {
    Morphism acc = compose_all(factors, alphabet);
    if (residual) acc = compose(acc, *residual);
    return acc;
}

std::vector<GeneratorName> permutation_factors(const Morphism& perm) {
    const Alphabet& a = perm.alphabet();
    if (!is_permutation(perm)) throw Error("permutation_factors: not a permutation");
    std::vector<std::size_t> map(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        map[i] = a.index(perm.image(a.at(i))[0]);

    std::vector<GeneratorName> out;
    std::vector<bool> seen(a.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i] || map[i] == i) { seen[i] = true; continue; }
        std::vector<std::size_t> cycle{i};
        seen[i] = true;
        for (std::size_t j = map[i]; j != i; j = map[j]) {
            cycle.push_back(j);
            seen[j] = true;
        }
        for (std::size_t k = cycle.size() - 1; k >= 1; --k)
            out.push_back(GeneratorName::E(a.at(cycle[0]), a.at(cycle[k])));
    }
    return out;
}

namespace {

GeneratorDecomposition reject(std::string why) {
    GeneratorDecomposition d;
    d.accepted = false;
    d.reject_reason = std::move(why);
    return d;
}

GeneratorDecomposition accept(std::vector<GeneratorName> factors,
                              std::optional<Morphism> residual = std::nullopt) {
    GeneratorDecomposition d;
    d.accepted = true;
    d.factors = std::move(factors);
    d.residual = std::move(residual);
    return d;
}

} // namespace

GeneratorDecomposition classify_episturmian_preserving(const Morphism& f) {
    const Alphabet& a = f.alphabet();

    if (auto alpha = p_class_letter(f)) {
        if (f == make_P(a, *alpha))
            return accept({GeneratorName::P(*alpha)});
        // Periodic image class but not the elementary collapse: keep the
        // morphism itself as the terminal factor of the certificate.
        return accept({}, f);
    }
    if (f.norm() == a.size() && is_permutation(f))
        return accept(permutation_factors(f));

    if (auto left = peel_left(f)) {
        GeneratorDecomposition rest = classify_episturmian_preserving(left->second);
        if (!rest.accepted)
            return reject("residual after peeling L" + std::string(1, left->first) +
                          " is not episturmian-preserving: " + rest.reject_reason);
        rest.factors.insert(rest.factors.begin(), GeneratorName::L(left->first));
        return rest;
    }
    if (auto right = peel_right(f)) {
        GeneratorDecomposition rest = classify_episturmian_preserving(right->second);
        if (!rest.accepted)
            return reject("residual after peeling R" + std::string(1, right->first) +
                          " is not episturmian-preserving: " + rest.reject_reason);
        rest.factors.insert(rest.factors.begin(), GeneratorName::R(right->first));
        return rest;
    }
    return reject("letter images neither share a first letter nor a last letter, "
                  "and the morphism is not a permutation or periodic collapse");
}

GeneratorDecomposition classify_sturmian_preserving(const Morphism& f) {
    const Alphabet& a = f.alphabet();
    if (a.size() != 2)
        throw Error("classify_sturmian_preserving needs a binary alphabet");
    Morphism id = Morphism::identity(a);
    Morphism exch = make_E(a, a.at(0), a.at(1));

    if (f == id) return accept({});
    if (f == exch) return accept({GeneratorName::E(a.at(0), a.at(1))});
    if (p_class_letter(f))
        return reject("collapses every word to a power of one letter");

    if (auto left = peel_left(f)) {
        GeneratorDecomposition rest = classify_sturmian_preserving(left->second);
        if (!rest.accepted) return rest;
        rest.factors.insert(rest.factors.begin(), GeneratorName::L(left->first));
        return rest;
    }
    if (auto right = peel_right(f)) {
        GeneratorDecomposition rest = classify_sturmian_preserving(right->second);
        if (!rest.accepted) return rest;
        rest.factors.insert(rest.factors.begin(), GeneratorName::R(right->first));
        return rest;
    }
    // f may be the exchange of a peelable morphism: E L_a = L_b E and the
    // three sibling identities let one exchange move to the tail.
    Morphism h = compose(exch, f);
    if (peel_left(h) || peel_right(h)) {
        GeneratorDecomposition rest = classify_sturmian_preserving(h);
        if (!rest.accepted) return rest;
        rest.factors.insert(rest.factors.begin(),
                            GeneratorName::E(a.at(0), a.at(1)));
        return rest;
    }
    return reject("no decomposition over {La, Lb, Ra, Rb, E}");
}

std::pair<std::vector<GeneratorName>, std::vector<GeneratorName>>
canonical_LR_exch(const std::vector<GeneratorName>& seq, const Alphabet& alphabet) {
    std::vector<Letter> pi(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) pi[i] = alphabet.at(i);
    auto apply_pi = [&](Letter c) { return pi[alphabet.index(c)]; };

    std::vector<GeneratorName> lr;
    for (const auto& g : seq) {
        switch (g.tag) {
            case GeneratorName::Tag::L:
                lr.push_back(GeneratorName::L(apply_pi(g.a)));
                break;
            case GeneratorName::Tag::R:
                lr.push_back(GeneratorName::R(apply_pi(g.a)));
                break;
            case GeneratorName::Tag::E: {
                // pi := pi . E(a,b)
                std::vector<Letter> next(pi);
                for (std::size_t i = 0; i < alphabet.size(); ++i) {
                    Letter c = alphabet.at(i);
                    Letter swapped = (c == g.a) ? g.b : (c == g.b) ? g.a : c;
                    next[i] = pi[alphabet.index(swapped)];
                }
                pi = std::move(next);
                break;
            }
            case GeneratorName::Tag::Id:
                break;
            default:
                throw Error("canonical_LR_exch handles only L, R, E and id tokens");
        }
    }

    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        images[alphabet.at(i)] = std::string(1, pi[i]);
    std::vector<GeneratorName> perm =
        permutation_factors(Morphism(alphabet, std::move(images)));
    return {std::move(lr), std::move(perm)};
}

std::string tokens_to_string(const std::vector<GeneratorName>& gens) {
    std::string out;
    for (const auto& g : gens) {
        if (!out.empty()) out += ' ';
        out += g.token();
    }
    return out;
}

} // namespace desub
