#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they check:
//  - naive_invariant_factors: plain row/column reduction with first-nonzero
//    pivoting and a pairwise gcd/lcm fixup, no transform tracking;
//  - minor_gcd_invariant_factors: d_1...d_k = gcd of all k x k minors;
//  - oracle_is_standard: unpruned search over all three permutations and
//    all class assignments.
// Plus seeded random generators for the property suites.

#include <numeric>
#include <random>

#include "trihomo/corpus.hpp"
#include "trihomo/diagram.hpp"
#include "trihomo/moves.hpp"
#include "trihomo/snf.hpp"
#include "trihomo/standardness.hpp"

namespace trihomo::testing {

inline std::vector<Int128> naive_invariant_factors(IntMat a) {
    const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    auto quot = [](Int128 x, Int128 p) {  // nearest, keeps entries small
        Int128 q = x / p;
        Int128 r = x - q * p;
        if (abs(r + r) > abs(p)) q += r.sign() == p.sign() ? Int128(1) : Int128(-1);
        return q;
    };
    size_t t = 0;
    while (t < rows && t < cols) {
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                if (pr == rows || abs(a[i][j]) < abs(a[pr][pc])) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                Int128 q = quot(a[i][t], a[t][t]);
                for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (!a[i][t].is_zero()) {
                    std::swap(a[t], a[i]);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                Int128 q = quot(a[t][j], a[t][t]);
                for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (!a[t][j].is_zero()) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    dirty = true;
                }
            }
        }
        ++t;
    }

    std::vector<Int128> d;
    for (size_t i = 0; i < t; ++i) d.push_back(abs(a[i][i]));
    // diag(x, y) ~ diag(gcd, lcm) until the chain holds
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if ((d[j] % d[i]).is_zero()) continue;
                Int128 g = gcd(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Definitional route for small matrices: the product d_1...d_k equals the
// gcd of all k x k minors.
inline std::vector<Int128> minor_gcd_invariant_factors(const IntMat& m) {
    const size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    auto combinations = [](size_t n, size_t k) {
        std::vector<std::vector<size_t>> out;
        std::vector<size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            out.push_back(idx);
            size_t i = k;
            while (i-- > 0) {
                if (idx[i] + (k - i) < n + 0) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) return out;
            }
        }
    };

    std::vector<Int128> gcds;  // gcds[k-1] = gcd of k x k minors
    for (size_t k = 1; k <= std::min(rows, cols); ++k) {
        Int128 g(0);
        for (const auto& ri : combinations(rows, k)) {
            for (const auto& ci : combinations(cols, k)) {
                IntMat sub(k, std::vector<Int128>(k));
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
                g = gcd(g, determinant(sub));
            }
            if (g == Int128(1)) break;
        }
        if (g.is_zero()) break;
        gcds.push_back(g);
    }
    std::vector<Int128> d;
    for (size_t k = 0; k < gcds.size(); ++k) d.push_back(k == 0 ? gcds[0] : gcds[k] / gcds[k - 1]);
    return d;
}

namespace detail {

inline bool oracle_pm1(const IntPoly& p) { return p.is_constant() && abs(p.coeff(0)) == Int128(1); }

inline int oracle_eq_sign(const HClass& u, const HClass& w) {
    if (u == w) return 1;
    if (u == -w) return -1;
    return 0;
}

}  // namespace detail

// Unpruned exhaustive check of standard position: all permutation triples,
// all class assignments; equality up to sign stands in for the sign search.
inline bool oracle_is_standard(const TrisectionMatrix& d, BulletReading reading = BulletReading::cyclic) {
    const int g = d.genus();
    if (g == 0) return true;
    const auto& A = d.family(Family::alpha);
    const auto& B = d.family(Family::beta);
    const auto& C = d.family(Family::gamma);
    auto om = [&](const std::vector<HClass>& F, int i, const std::vector<HClass>& G, int j) {
        return pairing(F[static_cast<size_t>(i)], G[static_cast<size_t>(j)]);
    };

    std::vector<int> pa(static_cast<size_t>(g)), pb(static_cast<size_t>(g)), pc(static_cast<size_t>(g));
    std::iota(pa.begin(), pa.end(), 0);
    do {
        std::iota(pb.begin(), pb.end(), 0);
        do {
            std::iota(pc.begin(), pc.end(), 0);
            do {
                long long nclasses = 1;
                for (int i = 0; i < g; ++i) nclasses *= 3;
                for (long long code = 0; code < nclasses; ++code) {
                    long long rest = code;
                    bool ok = true;
                    for (int slot = 0; slot < g && ok; ++slot) {
                        int cls = static_cast<int>(rest % 3);
                        rest /= 3;
                        int a = pa[static_cast<size_t>(slot)];
                        int b = pb[static_cast<size_t>(slot)];
                        int c = pc[static_cast<size_t>(slot)];
                        if (cls == 0) {
                            ok = detail::oracle_pm1(om(A, a, B, b)) && detail::oracle_pm1(om(A, a, C, c)) &&
                                 detail::oracle_eq_sign(B[static_cast<size_t>(b)], C[static_cast<size_t>(c)]) != 0;
                            for (int s2 = 0; s2 < g && ok; ++s2) {
                                if (s2 == slot) continue;
                                int x = pb[static_cast<size_t>(s2)];
                                ok = om(A, a, B, x).is_zero() && om(C, c, B, x).is_zero();
                            }
                        } else if (cls == 1) {
                            ok = detail::oracle_pm1(om(B, b, C, c)) && detail::oracle_pm1(om(B, b, A, a)) &&
                                 detail::oracle_eq_sign(C[static_cast<size_t>(c)], A[static_cast<size_t>(a)]) != 0;
                            for (int s2 = 0; s2 < g && ok; ++s2) {
                                if (s2 == slot) continue;
                                ok = om(B, b, C, pc[static_cast<size_t>(s2)]).is_zero();
                                if (!ok) break;
                                if (reading == BulletReading::cyclic)
                                    ok = om(A, a, C, pc[static_cast<size_t>(s2)]).is_zero();
                                else
                                    ok = om(B, b, A, pa[static_cast<size_t>(s2)]).is_zero();
                            }
                        } else {
                            ok = detail::oracle_pm1(om(C, c, A, a)) && detail::oracle_pm1(om(C, c, B, b)) &&
                                 detail::oracle_eq_sign(A[static_cast<size_t>(a)], B[static_cast<size_t>(b)]) != 0;
                            for (int s2 = 0; s2 < g && ok; ++s2) {
                                if (s2 == slot) continue;
                                ok = om(C, c, A, pa[static_cast<size_t>(s2)]).is_zero();
                                if (!ok) break;
                                if (reading == BulletReading::cyclic)
                                    ok = om(B, b, A, pa[static_cast<size_t>(s2)]).is_zero();
                                else
                                    ok = om(C, c, B, pb[static_cast<size_t>(s2)]).is_zero();
                            }
                        }
                    }
                    if (ok) return true;
                }
            } while (std::next_permutation(pc.begin(), pc.end()));
        } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
    return false;
}

// ----- seeded random generators -----

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    IntPoly poly(int max_degree, int max_coeff) {
        int deg = uniform(0, max_degree);
        std::vector<Int128> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = Int128(uniform(-max_coeff, max_coeff));
        return IntPoly::from_coeffs(std::move(c));
    }

    HClass hclass(int genus, int max_degree = 2, int max_coeff = 4) {
        std::vector<IntPoly> e(static_cast<size_t>(2 * genus));
        for (auto& x : e) x = poly(max_degree, max_coeff);
        return HClass(std::move(e));
    }

    IntMat int_matrix(size_t rows, size_t cols, int max_abs) {
        IntMat m(rows, std::vector<Int128>(cols));
        for (auto& r : m)
            for (auto& x : r) x = Int128(uniform(-max_abs, max_abs));
        return m;
    }

    Move move(int genus, int coeff_bound = 2) {
        SymplecticSpace space{genus};
        switch (genus >= 2 ? uniform(0, 3) : uniform(0, 2)) {
            case 0: {
                HClass v = HClass::zero(space);
                while (v.is_zero())
                    for (size_t k = 0; k < v.size(); ++k) v[k] = IntPoly(uniform(-2, 2));
                return TwistMove{v, nonzero_poly(coeff_bound)};
            }
            case 1:
                return NegateMove{static_cast<Family>(uniform(0, 2)), uniform(1, genus)};
            case 2: {
                std::vector<int> perm(static_cast<size_t>(genus));
                std::iota(perm.begin(), perm.end(), 1);
                for (int i = genus - 1; i > 0; --i)
                    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(uniform(0, i))]);
                return PermuteMove{static_cast<Family>(uniform(0, 2)), std::move(perm)};
            }
            default: {
                int i = uniform(1, genus);
                int j = uniform(1, genus - 1);
                if (j >= i) ++j;
                return SlideMove{static_cast<Family>(uniform(0, 2)), i, j, nonzero_poly(coeff_bound)};
            }
        }
    }

    IntPoly nonzero_poly(int coeff_bound) {
        for (;;) {
            IntPoly p = poly(1, coeff_bound);
            if (!p.is_zero()) return p;
        }
    }

    // A random matrix with isotropic rank-g families: a standard sphere
    // diagram pushed around by random moves (moves preserve both).
    TrisectionMatrix isotropic_matrix(int genus, int depth = 4) {
        int a = uniform(0, genus), b = uniform(0, genus - a);
        TrisectionMatrix d = build_standard_sphere(genus, {a, b, genus - a - b});
        for (int k = 0; k < depth; ++k) d = apply_move(d, move(genus));
        return d;
    }
};

}  // namespace trihomo::testing
