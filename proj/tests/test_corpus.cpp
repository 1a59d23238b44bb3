#include <catch2/catch_amalgamated.hpp>

#include "trihomo/corpus.hpp"

#include "trihomo/matrix_io.hpp"

#include "oracles.hpp"

using namespace trihomo;

namespace {

const IntPoly n = IntPoly::variable();

HClass hc(std::vector<IntPoly> v) { return HClass(std::move(v)); }

}  // namespace

TEST_CASE("the transcribed matrix T", "[corpus]") {
    TrisectionMatrix T = build(CorpusId::gluck_T());
    REQUIRE(T.genus() == 4);
    REQUIRE(T.family(Family::alpha)[3] ==
            hc({IntPoly(1), IntPoly(0), IntPoly(-2) - IntPoly(2) * n, IntPoly(3) + IntPoly(2) * n,
                IntPoly(1), IntPoly(1), IntPoly(1), IntPoly(-1)}));
    REQUIRE(T.family(Family::beta)[3] ==
            hc({IntPoly(0), IntPoly(0), IntPoly(-1) - IntPoly(2) * n, IntPoly(4) + IntPoly(2) * n,
                IntPoly(1), IntPoly(1), IntPoly(1), IntPoly(-1)}));
    REQUIRE(T.family(Family::gamma)[3] ==
            hc({IntPoly(0), IntPoly(-1) - IntPoly(2) * n, IntPoly(0), IntPoly(3) + IntPoly(2) * n,
                IntPoly(1), IntPoly(1), IntPoly(1), IntPoly(-1)}));

    // substitution at n = 1
    REQUIRE(evaluate(T, Int128(1)).family(Family::alpha)[3] == hc({1, 0, -4, 5, 1, 1, 1, -1}));
}

TEST_CASE("the final matrix of the reduction", "[corpus]") {
    TrisectionMatrix fin = build(CorpusId::theorem2_final());
    REQUIRE(fin.is_constant());
    REQUIRE(fin.family(Family::alpha)[3] == hc({0, 0, 0, 0, 1, 1, 1, -1}));
    REQUIRE(fin.family(Family::beta)[3] == hc({0, 0, 0, 1, 1, 1, 1, -1}));
    REQUIRE(fin.family(Family::gamma)[3] == hc({0, 0, 0, 0, 1, 1, 1, -1}));
    REQUIRE(equal(fin, build(CorpusId::theorem2_intermediate(7))));
}

TEST_CASE("corpus ids are validated", "[corpus]") {
    REQUIRE_THROWS_AS(build(CorpusId::theorem2_intermediate(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(build(CorpusId::theorem2_intermediate(8)), std::invalid_argument);
    REQUIRE_THROWS_AS(build(CorpusId::standard_sphere(3, {1, 1, 3})), std::invalid_argument);
}

TEST_CASE("every corpus matrix passes validation symbolically", "[corpus]") {
    std::vector<TrisectionMatrix> all{build(CorpusId::gluck_T())};
    for (int s = 1; s <= 7; ++s) all.push_back(build(CorpusId::theorem2_intermediate(s)));
    for (const TrisectionMatrix& d : all) {
        ValidationReport r = validate(d);
        REQUIRE(r.isotropy_ok == std::array<bool, 3>{true, true, true});
        REQUIRE(r.lagrangian_rank == std::array<int, 3>{4, 4, 4});
    }
}

TEST_CASE("standard sphere layout", "[corpus]") {
    TrisectionMatrix g1 = build(CorpusId::standard_sphere(1, {0, 0, 1}));
    REQUIRE(g1.family(Family::alpha)[0] == hc({1, 0}));
    REQUIRE(g1.family(Family::beta)[0] == hc({1, 0}));
    REQUIRE(g1.family(Family::gamma)[0] == hc({0, 1}));

    for (int g = 0; g <= 8; ++g)
        for (int a = 0; a <= g; ++a)
            for (int b = 0; a + b <= g; ++b) {
                TrisectionMatrix d = build(CorpusId::standard_sphere(g, {a, b, g - a - b}));
                auto w = is_standard_position(d);
                REQUIRE(w.has_value());
                if (g > 0) {
                    ValidationReport r = validate(d);
                    REQUIRE(r.families_ok());
                    REQUIRE(r.torsion_free());
                    REQUIRE(r.euler_consistent);
                }
            }
}

TEST_CASE("shipped matrix files match the embedded corpus", "[corpus]") {
    const std::string dir = TRIHOMO_DATA_DIR;
    REQUIRE(equal(read_matrix_file(dir + "/gluck_spun_torus_T.json"), build(CorpusId::gluck_T())));
    for (int s = 1; s <= 7; ++s) {
        TrisectionMatrix file = read_matrix_file(dir + "/theorem2_step" + std::to_string(s) + ".json");
        REQUIRE(equal(file, build(CorpusId::theorem2_intermediate(s))));
    }
}

TEST_CASE("scramble is seeded and invertible", "[corpus]") {
    TrisectionMatrix d = build(CorpusId::standard_sphere(3, {1, 1, 1}));

    auto [same, none] = scramble(d, 99, 0);
    REQUIRE(none.empty());
    REQUIRE(equal(same, d));

    auto [one, mv1] = scramble(d, 7, 1);
    REQUIRE(mv1.size() == 1);
    REQUIRE(equal(apply_move(one, inverse(mv1[0])), d));

    auto [a1, m1] = scramble(d, 1234, 5);
    auto [a2, m2] = scramble(d, 1234, 5);
    REQUIRE(equal(a1, a2));
    REQUIRE(m1 == m2);
    auto [a3, m3] = scramble(d, 1235, 5);
    REQUIRE((!(m1 == m3) || equal(a1, a3)));

    // replaying the inverses in reverse order restores the input
    std::vector<Move> undo;
    for (size_t i = m1.size(); i-- > 0;) undo.push_back(inverse(m1[i]));
    REQUIRE(equal(compose_apply(a1, undo), d));
}

TEST_CASE("scrambles usually leave standard position", "[corpus]") {
    int nonstandard = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto [s, moves] = scramble(build(CorpusId::standard_sphere(4, {1, 2, 1})), seed, 5);
        if (standardness_defect(s) > 0) ++nonstandard;
        std::vector<Move> undo;
        for (size_t i = moves.size(); i-- > 0;) undo.push_back(inverse(moves[i]));
        REQUIRE(standardness_defect(compose_apply(s, undo)) == 0);
    }
    REQUIRE(nonstandard >= 6);
}
