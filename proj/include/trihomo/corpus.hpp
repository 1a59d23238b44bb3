#pragma once

// Parametric generators for every matrix the construction prints, the
// standard-sphere family used as search ground truth, and seeded scrambles
// for planted search instances.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trihomo/corpus_data.hpp"
#include "trihomo/matrix_io.hpp"
#include "trihomo/moves.hpp"

namespace trihomo {

struct CorpusId {
    enum class Kind { gluck_spun_torus_T, theorem2_intermediate, theorem2_final, standard_sphere };

    Kind kind = Kind::gluck_spun_torus_T;
    int step = 0;                    // 1..7, theorem2_intermediate only
    int genus = 0;                   // standard_sphere only
    std::array<int, 3> counts{};     // standard_sphere class counts (A, B, C)

    static CorpusId gluck_T() { return {}; }
    static CorpusId theorem2_intermediate(int step) { return {Kind::theorem2_intermediate, step, 0, {}}; }
    static CorpusId theorem2_final() { return {Kind::theorem2_final, 0, 0, {}}; }
    static CorpusId standard_sphere(int g, std::array<int, 3> counts) {
        return {Kind::standard_sphere, 0, g, counts};
    }
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline TrisectionMatrix load_embedded(std::string_view name) {
    for (const corpus_data::EmbeddedMatrix& m : corpus_data::all) {
        if (m.name != name) continue;
        if (fnv1a64(m.text) != m.fnv1a64)
            throw std::logic_error("embedded corpus matrix '" + std::string(name) + "' fails its checksum");
        return matrix_from_text(std::string(m.text), std::string(name));
    }
    throw std::invalid_argument("unknown corpus matrix '" + std::string(name) + "'");
}

}  // namespace detail

// The homology matrix of the g-fold stabilized genus-0 diagram with the
// requested bullet-class counts. Alpha rows are e_1..e_g; the class decides
// where the dual lands:
//   class A: (e_i, e_{g+i}, e_{g+i}), class B: (e_i, e_{g+i}, e_i),
//   class C: (e_i, e_i, e_{g+i}).
inline TrisectionMatrix build_standard_sphere(int g, std::array<int, 3> counts) {
    if (g < 0 || counts[0] < 0 || counts[1] < 0 || counts[2] < 0 || counts[0] + counts[1] + counts[2] != g)
        throw std::invalid_argument("standard_sphere counts must be nonnegative and sum to the genus");
    SymplecticSpace space{g};
    std::vector<HClass> alpha, beta, gamma;
    for (int i = 1; i <= g; ++i) {
        HClass lo = HClass::basis_vector(space, i);
        HClass hi = HClass::basis_vector(space, g + i);
        alpha.push_back(lo);
        if (i <= counts[0]) {  // class A
            beta.push_back(hi);
            gamma.push_back(hi);
        } else if (i <= counts[0] + counts[1]) {  // class B
            beta.push_back(hi);
            gamma.push_back(lo);
        } else {  // class C
            beta.push_back(lo);
            gamma.push_back(hi);
        }
    }
    std::string label = "standard_sphere(g=" + std::to_string(g) + ",A=" + std::to_string(counts[0]) +
                        ",B=" + std::to_string(counts[1]) + ",C=" + std::to_string(counts[2]) + ")";
    return new_trisection_matrix(space, std::move(alpha), std::move(beta), std::move(gamma), std::move(label));
}

inline TrisectionMatrix build(const CorpusId& id) {
    switch (id.kind) {
        case CorpusId::Kind::gluck_spun_torus_T:
            return detail::load_embedded("gluck_spun_torus_T");
        case CorpusId::Kind::theorem2_intermediate:
            if (id.step < 1 || id.step > 7)
                throw std::invalid_argument("theorem2 intermediate step must be 1..7");
            return detail::load_embedded("theorem2_step" + std::to_string(id.step));
        case CorpusId::Kind::theorem2_final:
            return detail::load_embedded("theorem2_step7");
        case CorpusId::Kind::standard_sphere:
            return build_standard_sphere(id.genus, id.counts);
    }
    throw std::invalid_argument("unknown corpus id");
}

// Seeded random move sequences. Draws avoid std::*_distribution so the
// stream is identical across standard libraries. Twist vectors come from
// the basis so planted instances stay inside the search vocabulary.
inline std::pair<TrisectionMatrix, std::vector<Move>> scramble(const TrisectionMatrix& d, std::uint64_t seed,
                                                               int depth, int coefficient_bound = 2) {
    if (depth < 0) throw std::invalid_argument("scramble depth must be >= 0");
    if (coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
    const int g = d.genus();
    std::mt19937_64 rng(seed);
    auto pick = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    auto coefficient = [&]() {
        int c = 1 + pick(coefficient_bound);
        return pick(2) ? c : -c;
    };

    std::vector<Move> moves;
    TrisectionMatrix cur = d;
    while (static_cast<int>(moves.size()) < depth && g > 0) {
        Move mv;
        switch (pick(g >= 2 ? 4 : 3)) {  // genus 1 has no slides
            case 0: {
                HClass v = HClass::basis_vector(d.space, 1 + pick(2 * g));
                mv = TwistMove{std::move(v), IntPoly(coefficient())};
                break;
            }
            case 1:
                mv = NegateMove{static_cast<Family>(pick(3)), 1 + pick(g)};
                break;
            case 2: {
                std::vector<int> perm(static_cast<size_t>(g));
                for (int i = 0; i < g; ++i) perm[static_cast<size_t>(i)] = i + 1;
                for (int i = g - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(pick(i + 1))]);
                mv = PermuteMove{static_cast<Family>(pick(3)), std::move(perm)};
                break;
            }
            default: {
                int i = 1 + pick(g);
                int j = 1 + pick(g - 1);
                if (j >= i) ++j;
                mv = SlideMove{static_cast<Family>(pick(3)), i, j, IntPoly(coefficient())};
                break;
            }
        }
        cur = apply_move(cur, mv);
        moves.push_back(std::move(mv));
    }
    return {std::move(cur), std::move(moves)};
}

}  // namespace trihomo
