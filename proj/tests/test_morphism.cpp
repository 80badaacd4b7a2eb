#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "desub/morphism.hpp"

using namespace desub;

namespace {

Morphism f1() {
    return Morphism(Alphabet("abc"),
                    {{'a', "a"}, {'b', "bac"}, {'c', "baca"}});
}
Morphism f2() {
    return Morphism(Alphabet("ab"), {{'a', "ba"}, {'b', "ab"}});
}

Morphism random_morphism(std::mt19937& rng, const Alphabet& a,
                         std::size_t max_image) {
    std::uniform_int_distribution<std::size_t> len(1, max_image);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    std::map<Letter, std::string> images;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::string im;
        std::size_t n = len(rng);
        for (std::size_t j = 0; j < n; ++j) im += a.at(pick(rng));
        images[a.at(i)] = im;
    }
    return Morphism(a, std::move(images));
}

} // namespace

TEST_CASE("construction rejects erasing or foreign images") {
    Alphabet ab("ab");
    CHECK_THROWS_AS(Morphism(ab, {{'a', ""}, {'b', "a"}}), Error);
    CHECK_THROWS_AS(Morphism(ab, {{'a', "ac"}, {'b', "a"}}), Error);
    CHECK_THROWS_AS(Morphism(ab, {{'a', "a"}}), Error);
}

TEST_CASE("apply is letterwise concatenation") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    CHECK(La.apply(Word(ab, "bab")).str() == "abaab");
    CHECK(f1().apply("b") == "bac");
    Morphism mu(ab, {{'a', "ab"}, {'b', "ba"}});
    CHECK(mu.apply("ab") == "abba");
    CHECK(La.apply("").empty());
}

TEST_CASE("apply_prefix truncates soundly") {
    Alphabet ab("ab");
    Morphism mu(ab, {{'a', "ab"}, {'b', "ba"}});
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, 1);
    std::string u;
    for (int i = 0; i < 50; ++i) u += (pick(rng) ? 'a' : 'b');
    std::string full = mu.apply(u);
    for (std::size_t cap : {std::size_t(0), std::size_t(1), std::size_t(7),
                            std::size_t(50), std::size_t(200)})
        CHECK(mu.apply_prefix(u, cap) == full.substr(0, std::min(cap, full.size())));
}

TEST_CASE("generators match their defining images") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    CHECK(La.image('a') == "a");
    CHECK(La.image('b') == "ab");
    Morphism Rb = make_R(ab, 'b');
    CHECK(Rb.image('a') == "ab");
    CHECK(Rb.image('b') == "b");
    Alphabet abc("abc");
    Morphism E = make_E(abc, 'a', 'b');
    CHECK(E.image('a') == "b");
    CHECK(E.image('b') == "a");
    CHECK(E.image('c') == "c");
    CHECK_THROWS_AS(make_E(ab, 'a', 'a'), Error);
    Morphism Pa = make_P(ab, 'a');
    CHECK(Pa.image('a') == "a");
    CHECK(Pa.image('b') == "a");
}

TEST_CASE("compose") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    Morphism Ra = make_R(ab, 'a');
    Morphism id = Morphism::identity(ab);
    // exchange relation: La E = E Lb
    Morphism E = make_E(ab, 'a', 'b');
    CHECK(compose(La, E) == compose(E, make_L(ab, 'b')));
    CHECK(compose(id, La) == La);
    CHECK(compose(La, id) == La);
    // hand-composed: (La . Ra)(b) = La(ba) = aba
    CHECK(compose(La, Ra).image('b') == "aba");
    CHECK(compose(La, Ra).image('a') == "a");
}

TEST_CASE("compose agrees with applying twice") {
    Alphabet abc("abc");
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Morphism f = random_morphism(rng, abc, 3);
        Morphism g = random_morphism(rng, abc, 3);
        Morphism fg = compose(f, g);
        std::string w = "abccba";
        CHECK(fg.apply(w) == f.apply(g.apply(w)));
    }
}

TEST_CASE("norm") {
    Alphabet ab("ab");
    CHECK(Morphism::identity(ab).norm() == 2);
    CHECK(make_L(ab, 'a').norm() == 3);
    CHECK(f1().norm() == 8);
}

TEST_CASE("first_letter_map") {
    Alphabet ab("ab");
    auto h2 = first_letter_map(f2());
    CHECK(h2 == std::vector<Letter>{'b', 'a'});
    auto hL = first_letter_map(make_L(ab, 'a'));
    CHECK(hL == std::vector<Letter>{'a', 'a'});
    auto h1 = first_letter_map(f1());
    CHECK(h1 == std::vector<Letter>{'a', 'b', 'b'});
}

TEST_CASE("first_letter_map is functorial under composition") {
    Alphabet abc("abc");
    std::mt19937 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        Morphism f = random_morphism(rng, abc, 3);
        Morphism g = random_morphism(rng, abc, 3);
        auto hf = first_letter_map(f);
        auto hg = first_letter_map(g);
        auto hfg = first_letter_map(compose(f, g));
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(hfg[i] == hf[abc.index(hg[i])]);
    }
}

TEST_CASE("is_permutation") {
    Alphabet ab("ab");
    CHECK(is_permutation(make_E(ab, 'a', 'b')));
    CHECK(is_permutation(Morphism::identity(ab)));
    CHECK_FALSE(is_permutation(make_L(ab, 'a')));
    CHECK_FALSE(is_permutation(Morphism(ab, {{'a', "a"}, {'b', "a"}})));
}

TEST_CASE("permutations have norm #A") {
    Alphabet abcd("abcd");
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Morphism f = random_morphism(rng, abcd, 2);
        if (is_permutation(f)) CHECK(f.norm() == 4);
    }
}

TEST_CASE("p_class_letter") {
    Alphabet ab("ab");
    CHECK(p_class_letter(Morphism(ab, {{'a', "aa"}, {'b', "a"}})) == 'a');
    CHECK_FALSE(p_class_letter(make_L(ab, 'a')).has_value());
    CHECK(p_class_letter(Morphism(ab, {{'a', "b"}, {'b', "bb"}})) == 'b');
    CHECK_FALSE(p_class_letter(Morphism::identity(ab)).has_value());
}

TEST_CASE("peel_left") {
    Alphabet ab("ab");
    // phi = (a -> ab, b -> a) peels into La . E
    Morphism phi(ab, {{'a', "ab"}, {'b', "a"}});
    auto peeled = peel_left(phi);
    REQUIRE(peeled.has_value());
    CHECK(peeled->first == 'a');
    CHECK(peeled->second.image('a') == "b");
    CHECK(peeled->second.image('b') == "a");
    CHECK(compose(make_L(ab, 'a'), peeled->second) == phi);

    CHECK_FALSE(peel_left(f2()).has_value()); // images start with b and a

    auto self = peel_left(make_L(ab, 'a'));
    REQUIRE(self.has_value());
    CHECK(self->first == 'a');
    CHECK(self->second == Morphism::identity(ab));
}

TEST_CASE("peel_right") {
    Alphabet ab("ab");
    Morphism RbLa = compose(make_R(ab, 'b'), make_L(ab, 'a'));
    auto peeled = peel_right(RbLa);
    REQUIRE(peeled.has_value());
    CHECK(peeled->first == 'b');
    CHECK(peeled->second == make_L(ab, 'a'));
    CHECK(compose(make_R(ab, 'b'), peeled->second) == RbLa);

    // La(a) = a ends with a, La(b) = ab ends with b: no common last letter
    CHECK_FALSE(peel_right(make_L(ab, 'a')).has_value());

    auto self = peel_right(make_R(ab, 'a'));
    REQUIRE(self.has_value());
    CHECK(self->first == 'a');
    CHECK(self->second == Morphism::identity(ab));
}

TEST_CASE("peel_left recovers a composition-equal pair for random residuals") {
    Alphabet abc("abc");
    std::mt19937 rng(43);
    int peeled_count = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Morphism g = random_morphism(rng, abc, 4);
        if (g.norm() > 12) continue;
        for (Letter alpha : {'a', 'b', 'c'}) {
            Morphism f = compose(make_L(abc, alpha), g);
            auto back = peel_left(f);
            REQUIRE(back.has_value());
            CHECK(compose(make_L(abc, back->first), back->second) == f);
            ++peeled_count;
        }
    }
    CHECK(peeled_count > 100);
}

TEST_CASE("morphisms map eventually periodic words exactly") {
    Alphabet ab("ab");
    Morphism La = make_L(ab, 'a');
    EventuallyPeriodicWord w(ab, "b", "ab");
    EventuallyPeriodicWord image = La.apply(w);
    CHECK(expand(image, 30).str() == La.apply(expand(w, 30)).str().substr(0, 30));
}
