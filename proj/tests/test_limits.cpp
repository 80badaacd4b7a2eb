#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "desub/limits.hpp"
#include "desub/fixed_point.hpp"

using namespace desub;

namespace {

DirectiveSpec parse_spec(const char* alphabet, const char* text) {
    return DirectiveSpec::parse(Alphabet(alphabet), text);
}

bool contains_periodic(const std::vector<LimitPoint>& pts,
                       const EventuallyPeriodicWord& w) {
    for (const auto& p : pts)
        if (p.is_periodic() && *p.periodic == w) return true;
    return false;
}

} // namespace

TEST_CASE("limit points of (Rb)^w") {
    DirectiveSpec spec = parse_spec("ab", "(Rb)^w");
    std::vector<LimitPoint> pts = limit_points(spec);
    Alphabet ab("ab");
    CHECK(contains_periodic(pts, EventuallyPeriodicWord(ab, "", "b")));
    // the expanding chain from a gives ab^w = b^0 a b^w, a member of the
    // stable set {b^w} u {b^n a b^w}
    bool found_stream = false;
    for (auto& p : pts)
        if (!p.is_periodic()) {
            found_stream = true;
            CHECK(p.prefix(6).str() == "abbbbb");
        }
    CHECK(found_stream);
    CHECK(pts.size() == 2);
}

TEST_CASE("limit points of (La)^w is just a^w") {
    DirectiveSpec spec = parse_spec("ab", "(La)^w");
    std::vector<LimitPoint> pts = limit_points(spec);
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].is_periodic());
    CHECK(*pts[0].periodic == EventuallyPeriodicWord(Alphabet("ab"), "", "a"));
}

TEST_CASE("limit points of (f2)^w are the two Thue-Morse streams") {
    Alphabet ab("ab");
    MorphismTable table;
    table.add("f2", Morphism(ab, {{'a', "ba"}, {'b', "ab"}}));
    DirectiveSpec spec(ab, {}, {GeneratorName::Named("f2")}, &table);
    std::vector<LimitPoint> pts = limit_points(spec);
    REQUIRE(pts.size() == 2);
    CHECK_FALSE(pts[0].is_periodic());
    CHECK_FALSE(pts[1].is_periodic());
    // fixed points of mu^2 = f2^2: the Thue-Morse word and its exchange
    Morphism mu(ab, {{'a', "ab"}, {'b', "ba"}});
    std::string tm = "a";
    while (tm.size() < 64) tm = mu.apply(tm);
    std::set<std::string> got{pts[0].prefix(64).str(), pts[1].prefix(64).str()};
    std::string tmE;
    for (char c : tm) tmE += (c == 'a' ? 'b' : 'a');
    CHECK(got == std::set<std::string>{tm.substr(0, 64), tmE.substr(0, 64)});
}

TEST_CASE("limit points honor the preperiod: f . id^w") {
    Alphabet abc("abc");
    MorphismTable table;
    table.add("f", Morphism(abc, {{'a', "bc"}, {'b', "b"}, {'c', "c"}}));
    DirectiveSpec spec(abc, {GeneratorName::Named("f")}, {GeneratorName::Id()},
                       &table);
    std::vector<LimitPoint> pts = limit_points(spec);
    CHECK(contains_periodic(pts, EventuallyPeriodicWord(abc, "", "b")));
    CHECK(contains_periodic(pts, EventuallyPeriodicWord(abc, "", "c")));
    CHECK(contains_periodic(pts, EventuallyPeriodicWord(abc, "", "bc")));
    CHECK(pts.size() == 3);
}

TEST_CASE("chains of (La Lb)^w: one expanding chain, the standard word") {
    DirectiveSpec spec = parse_spec("ab", "(La Lb)^w");
    std::vector<KonigChain> chains = konig_chains(spec);
    REQUIRE(chains.size() == 1);
    CHECK_FALSE(chains[0].letter_cycle);
    LimitPoint lp = limit_point_of_chain(spec, chains[0]);
    CHECK(lp.prefix(8).str() == "abaababa");
}

TEST_CASE("letter cycle through an expanding entry: Rb La directive") {
    // pre = [Rb], period = [La]: the only chain settles on a^w below Rb,
    // so the limit point is Rb(a^w) = (ab)^w
    DirectiveSpec spec = parse_spec("ab", "Rb (La)^w");
    std::vector<LimitPoint> pts = limit_points(spec);
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].is_periodic());
    CHECK(*pts[0].periodic == EventuallyPeriodicWord(Alphabet("ab"), "", "ab"));
}

TEST_CASE("default chain prefers periodic limit words") {
    DirectiveSpec spec = parse_spec("ab", "(Rb)^w");
    KonigChain chain = default_chain(spec);
    CHECK(chain.letter_cycle);
    LimitPoint lp = limit_point_of_chain(spec, chain);
    CHECK(lp.prefix(4).str() == "bbbb");
}

TEST_CASE("limit points coincide with fixed point families for a single morphism") {
    Alphabet abc("abc");
    std::vector<Morphism> cases = {
        Morphism(abc, {{'a', "a"}, {'b', "bac"}, {'c', "baca"}}),   // f1
        Morphism(abc, {{'a', "abab"}, {'b', "b"}, {'c', "c"}}),     // g + fixed c
        Morphism(abc, {{'a', "ba"}, {'b', "ab"}, {'c', "c"}}),      // f2 + fixed c
    };
    for (const auto& f : cases) {
        MorphismTable table;
        table.add("f", f);
        DirectiveSpec spec(abc, {}, {GeneratorName::Named("f")}, &table);
        FixedPointReport rep = fixed_point_analysis(f);
        std::vector<LimitPoint> pts = limit_points(spec);

        // every expanding seed appears as a stream, every mortal letter as a
        // purely periodic limit point
        for (Letter seed : rep.expanding_seeds) {
            Morphism fpow = f;
            for (std::size_t k = 1; k < rep.pi; ++k) fpow = compose(fpow, f);
            std::string fam(1, seed);
            while (fam.size() < 48) fam = fpow.apply(fam);
            bool found = false;
            for (auto& p : pts)
                if (!p.is_periodic() && p.prefix(48).str() == fam.substr(0, 48))
                    found = true;
            CHECK_MESSAGE(found, "missing stream for seed " << seed);
        }
        for (Letter m : rep.mortal_letters)
            CHECK(contains_periodic(
                pts, EventuallyPeriodicWord(abc, "", std::string(1, m))));
    }
}

TEST_CASE("prefix stream is monotone and clones restart") {
    DirectiveSpec spec = parse_spec("ab", "(La Lb)^w");
    LimitPoint lp = limit_point_of_chain(spec, default_chain(spec));
    REQUIRE_FALSE(lp.is_periodic());
    PrefixStream s = lp.stream->clone();
    std::string first8;
    for (int i = 0; i < 8; ++i) first8 += s.next();
    CHECK(first8 == "abaababa");
    CHECK(s.position() == 8);
    PrefixStream t = s.clone();
    CHECK(t.position() == 0);
    CHECK(t.prefix(16).str().substr(0, 8) == first8);
    CHECK(s.prefix(4).str() == first8.substr(0, 4));
}

TEST_CASE("directive without a period is rejected") {
    DirectiveSpec spec = parse_spec("ab", "La Lb");
    CHECK_THROWS_AS(limit_points(spec), Error);
}
