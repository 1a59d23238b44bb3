#pragma once

// The homological move calculus on trisection matrices:
//
//   slide   r_i <- r_i + m * r_j    (one row of one family, i != j)
//   twist   x   <- x + k * Omega(x, v) * v   (every row, all families)
//   negate  r_i <- -r_i
//   permute reindex one family
//
// A twist is the k-th power of the symplectic transvection along v, so it
// preserves the pairing of every pair of rows exactly. All moves are pure:
// apply_move() returns a new matrix.

#include <string>
#include <variant>
#include <vector>

#include "trihomo/diagram.hpp"

namespace trihomo {

struct SlideMove {
    Family family = Family::alpha;
    int i = 0;  // 1-based row being changed
    int j = 0;  // 1-based row slid over
    IntPoly m;

    friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

struct TwistMove {
    HClass v;  // nonzero integer vector (constant entries)
    IntPoly k;

    friend bool operator==(const TwistMove&, const TwistMove&) = default;
};

struct NegateMove {
    Family family = Family::alpha;
    int i = 0;

    friend bool operator==(const NegateMove&, const NegateMove&) = default;
};

struct PermuteMove {
    Family family = Family::alpha;
    std::vector<int> perm;  // new row i takes old row perm[i], 1-based

    friend bool operator==(const PermuteMove&, const PermuteMove&) = default;
};

using Move = std::variant<SlideMove, TwistMove, NegateMove, PermuteMove>;

inline bool is_valid_permutation(const std::vector<int>& perm, int g) {
    if (perm.size() != static_cast<size_t>(g)) return false;
    std::vector<bool> seen(static_cast<size_t>(g), false);
    for (int p : perm) {
        if (p < 1 || p > g || seen[static_cast<size_t>(p - 1)]) return false;
        seen[static_cast<size_t>(p - 1)] = true;
    }
    return true;
}

// Geometric realizability wants a primitive twist vector; the homological
// calculus does not care, so an imprimitive v is only a warning.
inline bool is_primitive(const HClass& v) {
    Int128 g(0);
    for (const IntPoly& e : v.entries()) g = gcd(g, e.constant_value());
    return g == Int128(1);
}

inline void check_move(const Move& mv, const SymplecticSpace& space) {
    const int g = space.genus;
    if (const auto* s = std::get_if<SlideMove>(&mv)) {
        if (s->i == s->j) throw MoveError("slide with i == j");
        if (s->i < 1 || s->i > g || s->j < 1 || s->j > g)
            throw MoveError("slide index out of range 1.." + std::to_string(g));
    } else if (const auto* t = std::get_if<TwistMove>(&mv)) {
        if (t->v.size() != static_cast<size_t>(space.dimension()))
            throw MoveError("twist vector has length " + std::to_string(t->v.size()) + ", want " +
                            std::to_string(space.dimension()));
        if (!t->v.is_constant()) throw MoveError("twist vector must have integer entries");
        if (t->v.is_zero()) throw MoveError("twist vector is zero");
    } else if (const auto* ng = std::get_if<NegateMove>(&mv)) {
        if (ng->i < 1 || ng->i > g) throw MoveError("negate index out of range 1.." + std::to_string(g));
    } else if (const auto* p = std::get_if<PermuteMove>(&mv)) {
        if (!is_valid_permutation(p->perm, g)) throw MoveError("not a permutation of 1.." + std::to_string(g));
    }
}

inline TrisectionMatrix apply_move(const TrisectionMatrix& d, const Move& mv) {
    check_move(mv, d.space);
    TrisectionMatrix out = d;
    if (const auto* s = std::get_if<SlideMove>(&mv)) {
        auto& fam = out.family(s->family);
        fam[static_cast<size_t>(s->i - 1)] =
            fam[static_cast<size_t>(s->i - 1)] + s->m * fam[static_cast<size_t>(s->j - 1)];
    } else if (const auto* t = std::get_if<TwistMove>(&mv)) {
        for (auto& fam : out.rows)
            for (HClass& x : fam) x = x + (t->k * pairing(x, t->v)) * t->v;
    } else if (const auto* ng = std::get_if<NegateMove>(&mv)) {
        auto& fam = out.family(ng->family);
        fam[static_cast<size_t>(ng->i - 1)] = -fam[static_cast<size_t>(ng->i - 1)];
    } else if (const auto* p = std::get_if<PermuteMove>(&mv)) {
        const auto& src = d.family(p->family);
        auto& dst = out.family(p->family);
        for (size_t i = 0; i < p->perm.size(); ++i) dst[i] = src[static_cast<size_t>(p->perm[i] - 1)];
    }
    return out;
}

// Left-to-right fold; the first failing move aborts with its 1-based index.
inline TrisectionMatrix compose_apply(const TrisectionMatrix& d, const std::vector<Move>& moves) {
    TrisectionMatrix cur = d;
    for (size_t i = 0; i < moves.size(); ++i) {
        try {
            cur = apply_move(cur, moves[i]);
        } catch (const MoveError& e) {
            throw MoveError("move " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return cur;
}

inline Move inverse(const Move& mv) {
    if (const auto* s = std::get_if<SlideMove>(&mv)) return SlideMove{s->family, s->i, s->j, -s->m};
    if (const auto* t = std::get_if<TwistMove>(&mv)) return TwistMove{t->v, -t->k};
    if (const auto* ng = std::get_if<NegateMove>(&mv)) return *ng;
    const auto& p = std::get<PermuteMove>(mv);
    std::vector<int> inv(p.perm.size());
    for (size_t i = 0; i < p.perm.size(); ++i) inv[static_cast<size_t>(p.perm[i] - 1)] = static_cast<int>(i + 1);
    return PermuteMove{p.family, std::move(inv)};
}

inline Move evaluate(const Move& mv, Int128 n0) {
    if (const auto* s = std::get_if<SlideMove>(&mv))
        return SlideMove{s->family, s->i, s->j, IntPoly(s->m.evaluate(n0))};
    if (const auto* t = std::get_if<TwistMove>(&mv)) return TwistMove{t->v, IntPoly(t->k.evaluate(n0))};
    return mv;
}

}  // namespace trihomo
