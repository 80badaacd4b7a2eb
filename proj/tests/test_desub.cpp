#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "desub/desub.hpp"
#include "desub/families.hpp"

using namespace desub;

namespace {

SubstitutionSet sbal() {
    return family_members(FamilyDescriptor{FamilyTag::Sbal, Alphabet("ab"), 1});
}

// Independent parse oracle: dynamic programming over positions, entirely
// separate from the backtracking implementation. Returns full-cover parses
// (complete images plus an optional partial final image).
std::set<Parse> oracle_parses(const std::string& w, const Morphism& sigma) {
    const Alphabet& a = sigma.alphabet();
    // reach[i] = set of preimages covering w[0..i) by complete images
    std::vector<std::set<std::string>> reach(w.size() + 1);
    reach[0].insert("");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (reach[i].empty()) continue;
        for (char c : a.letters()) {
            const std::string& im = sigma.image(c);
            if (i + im.size() <= w.size() && w.compare(i, im.size(), im) == 0)
                for (const auto& u : reach[i])
                    reach[i + im.size()].insert(u + c);
        }
    }
    std::set<Parse> out;
    for (const auto& u : reach[w.size()]) out.insert({u, w.size()});
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool partial = false;
        for (char c : a.letters()) {
            const std::string& im = sigma.image(c);
            if (im.size() > w.size() - i &&
                im.compare(0, w.size() - i, w, i, w.size() - i) == 0)
                partial = true;
        }
        if (partial)
            for (const auto& u : reach[i]) out.insert({u, i});
    }
    return out;
}

// Independent chain enumerator for directive_parses completeness: all
// sequences of (member, preimage) choices, recursion on the oracle parses.
std::set<std::vector<std::string>> oracle_chains(const std::string& w,
                                                 const SubstitutionSet& s,
                                                 int depth) {
    std::set<std::vector<std::string>> out;
    std::function<void(const std::string&, int, std::vector<std::string>&)> walk =
        [&](const std::string& word, int d, std::vector<std::string>& chain) {
            if (!chain.empty()) out.insert(chain);
            if (d == 0) return;
            for (const auto& [name, sigma] : s.members)
                for (const auto& p : oracle_parses(word, sigma)) {
                    if (p.preimage.empty()) continue;
                    chain.push_back(name + "/" + p.preimage);
                    walk(p.preimage, d - 1, chain);
                    chain.pop_back();
                }
        };
    std::vector<std::string> chain;
    walk(w, depth, chain);
    return out;
}

// Every chain (of any depth up to the request) present in a DesubTree.
std::set<std::vector<std::string>> tree_chains(const DesubTree& t) {
    std::set<std::vector<std::string>> out;
    std::function<void(const DesubNode&, std::vector<std::string>&)> walk =
        [&](const DesubNode& n, std::vector<std::string>& chain) {
            chain.push_back(n.morphism + "/" + n.preimage);
            out.insert(chain);
            for (const auto& c : n.children) walk(c, chain);
            chain.pop_back();
        };
    std::vector<std::string> chain;
    for (const auto& c : t.children) walk(c, chain);
    return out;
}

std::string random_balanced_prefix(std::mt19937& rng, std::size_t len) {
    // image of a random letter under a random S_bal composition
    SubstitutionSet s = sbal();
    std::uniform_int_distribution<std::size_t> pick(0, s.members.size() - 1);
    std::string w(1, pick(rng) % 2 ? 'a' : 'b');
    while (w.size() < len) w = s.members[pick(rng)].second.apply(w);
    return w.substr(0, len);
}

} // namespace

TEST_CASE("desubstitute_prefix unique full parse") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    std::set<Parse> parses = desubstitute_prefix(Word(ab, "abaab"), La);
    REQUIRE(parses.size() == 1);
    CHECK(parses.begin()->preimage == "bab");
    CHECK(parses.begin()->consumed == 5);
}

TEST_CASE("desubstitute_prefix ambiguous code keeps every parse") {
    Alphabet abc("abc");
    Morphism f1(abc, {{'a', "a"}, {'b', "bac"}, {'c', "baca"}});
    std::set<Parse> parses = desubstitute_prefix(Word(abc, "baca"), f1);
    // f1(c) = f1(ba) = baca
    CHECK(parses.count({"c", 4}) == 1);
    CHECK(parses.count({"ba", 4}) == 1);
}

TEST_CASE("desubstitute_prefix with no parse") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    CHECK(desubstitute_prefix(Word(ab, "b"), La).empty());
    CHECK(desubstitute_prefix(Word(ab, "abb"), La).empty());
}

TEST_CASE("desubstitute_prefix partial final image") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    // aba over {a, ab}: complete ab.a, or ab then "a" cut from a second "ab"
    std::set<Parse> parses = desubstitute_prefix(Word(ab, "aba"), La);
    CHECK(parses.count({"ba", 3}) == 1);
    CHECK(parses.count({"b", 2}) == 1);
    CHECK(parses.size() == 2);
}

TEST_CASE("desubstitute_prefix agrees with the DP oracle") {
    Alphabet ab("ab");
    std::mt19937 rng(61);
    SubstitutionSet s = sbal();
    std::uniform_int_distribution<std::size_t> len(1, 12);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        std::string w;
        std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) w += bit(rng) ? 'a' : 'b';
        for (const auto& [name, sigma] : s.members)
            CHECK(desubstitute_prefix(Word(ab, w), sigma) == oracle_parses(w, sigma));
    }
}

TEST_CASE("desubstitute_exact") {
    Alphabet abc("abc");
    Morphism f1(abc, {{'a', "a"}, {'b', "bac"}, {'c', "baca"}});
    CHECK(desubstitute_exact("baca", f1) == std::set<std::string>{"ba", "c"});
    CHECK(desubstitute_exact("bac", f1) == std::set<std::string>{"b"});
    CHECK(desubstitute_exact("b", f1).empty());
    CHECK(desubstitute_exact("", f1) == std::set<std::string>{""});
}

TEST_CASE("directive_parses on a^4 under S_bal") {
    Alphabet ab("ab");
    DesubTree t = directive_parses(Word(ab, "aaaa"), sbal(), 2);
    CHECK_FALSE(t.empty());
    CHECK(t.has_full_depth_chain());
    auto chains = tree_chains(t);
    CHECK(chains.count({"La/aaaa", "La/aaaa"}) == 1);
    CHECK(chains.count({"La/aaaa", "Ra/aaaa"}) == 1);
    // Lb and Rb cannot parse a word of a's
    for (const auto& c : chains) CHECK(c[0].substr(0, 2) != "Lb");
}

TEST_CASE("directive_parses finds nothing for abb under La") {
    Alphabet ab("ab");
    SubstitutionSet s;
    s.alphabet = ab;
    s.add("La", make_L(ab, 'a'));
    DesubTree t = directive_parses(Word(ab, "abb"), s, 1);
    CHECK(t.empty());
    CHECK_FALSE(t.has_full_depth_chain());
}

TEST_CASE("directive_parses matches the oracle enumerator at small scale") {
    Alphabet ab("ab");
    std::mt19937 rng(67);
    SubstitutionSet s = sbal();
    std::uniform_int_distribution<std::size_t> len(1, 10);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::string w;
        std::size_t n = len(rng);
        for (std::size_t i = 0; i < n; ++i) w += bit(rng) ? 'a' : 'b';
        int depth = 1 + trial % 3;
        DesubTree t = directive_parses(Word(ab, w), s, depth);
        CHECK_FALSE(t.truncated);
        CHECK(tree_chains(t) == oracle_chains(w, s, depth));
    }
}

TEST_CASE("directive_parses soundness: reapplying a chain regenerates a superword") {
    Alphabet ab("ab");
    std::mt19937 rng(71);
    SubstitutionSet s = sbal();
    for (int trial = 0; trial < 40; ++trial) {
        std::string w = random_balanced_prefix(rng, 20 + trial % 30);
        DesubTree t = directive_parses(Word(ab, w), s, 4);
        std::function<void(const DesubNode&, std::vector<const DesubNode*>&)> walk =
            [&](const DesubNode& n, std::vector<const DesubNode*>& path) {
                path.push_back(&n);
                std::string word = n.preimage;
                for (auto it = path.rbegin(); it != path.rend(); ++it) {
                    const Morphism* m = nullptr;
                    for (const auto& [name, mm] : s.members)
                        if (name == (*it)->morphism) m = &mm;
                    REQUIRE(m != nullptr);
                    word = m->apply(word);
                }
                // the chain explains a prefix of w; what it misses is at most
                // the cut-off tail of one image per level
                std::size_t cover = std::min(word.size(), w.size());
                CHECK(word.compare(0, cover, w, 0, cover) == 0);
                for (const auto& c : n.children) walk(c, path);
                path.pop_back();
            };
        std::vector<const DesubNode*> path;
        for (const auto& c : t.children) walk(c, path);
    }
}

TEST_CASE("directive_parses budget exhaustion flags truncation") {
    Alphabet ab("ab");
    std::mt19937 rng(73);
    std::string w = random_balanced_prefix(rng, 64);
    DesubTree t = directive_parses(Word(ab, w), sbal(), 6, 10);
    CHECK(t.truncated);
    CHECK(t.node_count <= 10);
}

TEST_CASE("balanced_desub_step table rows") {
    Alphabet ab("ab");
    auto [g1, p1] = balanced_desub_step(Word(ab, "abaab"));
    CHECK(g1.token() == "La");
    CHECK(p1 == "bab");

    // babba = Lb(aba): full decode ba.b.ba over {ba, b}
    auto [g2, p2] = balanced_desub_step(Word(ab, "babba"));
    CHECK(g2.token() == "Lb");
    CHECK(p2 == "aba");

    // both squares absent: tie-break to the L row of the first letter
    auto [g3, p3] = balanced_desub_step(Word(ab, "ababa"));
    CHECK(g3.token() == "La");
    auto [g4, p4] = balanced_desub_step(Word(ab, "babab"));
    CHECK(g4.token() == "Lb");

    // starts a, aa absent (bb present): row Rb over {ab, b}
    auto [g5, p5] = balanced_desub_step(Word(ab, "abb"));
    CHECK(g5.token() == "Rb");
    CHECK(p5 == "ab");

    CHECK_THROWS_AS(balanced_desub_step(Word(ab, "aababb")), Error);
    CHECK_THROWS_AS(balanced_desub_step(Word(ab, "a")), Error);
}

TEST_CASE("balanced_desub_step reapplication covers the word") {
    Alphabet ab("ab");
    std::mt19937 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        std::string w = random_balanced_prefix(rng, 10 + trial % 40);
        auto [gen, pre] = balanced_desub_step(Word(ab, w));
        Morphism sigma = resolve(gen, ab);
        std::string back = sigma.apply(pre);
        // the preimage explains all of w except a possibly cut final image
        CHECK(w.compare(0, back.size(), back) == 0);
        CHECK(w.size() - back.size() < 2); // longest image is 2 letters
    }
}

TEST_CASE("tree renderings and json round trip") {
    Alphabet ab("ab");
    DesubTree t = directive_parses(Word(ab, "aaaa"), sbal(), 2);
    std::string lines = t.render_lines();
    CHECK(lines.find("La\taaaa\t4") != std::string::npos);
    std::string indented = t.render_indented();
    CHECK(indented.find("word aaaa") == 0);
    DesubTree back = DesubTree::from_json(t.to_json());
    CHECK(back.to_json() == t.to_json());
    CHECK(back.root == "aaaa");
}
