#pragma once

// The genus-g symplectic lattice H_1(Sigma_g) = Z^{2g} with the pairing
//
//     Omega(a, b) = sum_{i=1..g} (a_{g+i} b_i - a_i b_{g+i}),
//
// i.e. Omega(e_i, e_{g+i}) = -1 and Omega(e_{g+i}, e_i) = +1. Vectors carry
// polynomial entries so whole families can stay symbolic in n.

#include <vector>

#include "trihomo/errors.hpp"
#include "trihomo/poly.hpp"

namespace trihomo {

struct SymplecticSpace {
    int genus = 0;

    int dimension() const { return 2 * genus; }

    friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;
};

// A first-homology class of a diagram curve: 2g polynomial coordinates with
// respect to the fixed symplectic basis.
class HClass {
  public:
    HClass() = default;
    explicit HClass(std::vector<IntPoly> entries) : entries_(std::move(entries)) {}

    static HClass zero(const SymplecticSpace& s) {
        return HClass(std::vector<IntPoly>(static_cast<size_t>(s.dimension())));
    }

    // e_index, 1-based, 1 <= index <= 2g.
    static HClass basis_vector(const SymplecticSpace& s, int index) {
        if (index < 1 || index > s.dimension())
            throw DimensionError("basis index " + std::to_string(index) + " out of range for genus " +
                                 std::to_string(s.genus));
        HClass v = zero(s);
        v.entries_[static_cast<size_t>(index - 1)] = IntPoly(1);
        return v;
    }

    size_t size() const { return entries_.size(); }
    const IntPoly& operator[](size_t k) const { return entries_[k]; }
    IntPoly& operator[](size_t k) { return entries_[k]; }
    const std::vector<IntPoly>& entries() const { return entries_; }

    bool is_zero() const {
        for (const IntPoly& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool is_constant() const {
        for (const IntPoly& e : entries_)
            if (!e.is_constant()) return false;
        return true;
    }

    friend HClass operator+(const HClass& a, const HClass& b) {
        check_same(a, b);
        std::vector<IntPoly> e(a.size());
        for (size_t k = 0; k < a.size(); ++k) e[k] = a[k] + b[k];
        return HClass(std::move(e));
    }
    friend HClass operator-(const HClass& a, const HClass& b) {
        check_same(a, b);
        std::vector<IntPoly> e(a.size());
        for (size_t k = 0; k < a.size(); ++k) e[k] = a[k] - b[k];
        return HClass(std::move(e));
    }
    friend HClass operator-(const HClass& a) {
        std::vector<IntPoly> e(a.size());
        for (size_t k = 0; k < a.size(); ++k) e[k] = -a[k];
        return HClass(std::move(e));
    }
    friend HClass operator*(const IntPoly& s, const HClass& a) {
        std::vector<IntPoly> e(a.size());
        for (size_t k = 0; k < a.size(); ++k) e[k] = s * a[k];
        return HClass(std::move(e));
    }

    friend bool operator==(const HClass& a, const HClass& b) { return a.entries_ == b.entries_; }

    HClass evaluate(Int128 n0) const {
        std::vector<IntPoly> e(size());
        for (size_t k = 0; k < size(); ++k) e[k] = IntPoly(entries_[k].evaluate(n0));
        return HClass(std::move(e));
    }

  private:
    static void check_same(const HClass& a, const HClass& b) {
        if (a.size() != b.size()) throw DimensionError("homology classes from different spaces");
    }

    std::vector<IntPoly> entries_;
};

// The symplectic intersection pairing. Bilinear, antisymmetric, exact.
inline IntPoly pairing(const HClass& a, const HClass& b) {
    if (a.size() != b.size()) throw DimensionError("pairing of classes from different spaces");
    if (a.size() % 2 != 0) throw DimensionError("symplectic space has odd dimension");
    const size_t g = a.size() / 2;
    IntPoly acc;
    for (size_t i = 0; i < g; ++i) acc += a[g + i] * b[i] - a[i] * b[g + i];
    return acc;
}

inline int compare_pivot(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    auto c = coeff_size(a) <=> coeff_size(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// Rank of the row span over the fraction field Q(n), by fraction-free
// (Bareiss) elimination; all divisions are exact in Z[n].
inline int rank_over_fraction_field(const std::vector<HClass>& rows) {
    if (rows.empty()) throw DimensionError("rank of an empty list of rows");
    const size_t cols = rows[0].size();
    for (const HClass& r : rows)
        if (r.size() != cols) throw DimensionError("rows from different spaces");

    std::vector<std::vector<IntPoly>> m;
    m.reserve(rows.size());
    for (const HClass& r : rows) m.push_back(r.entries());

    size_t rank = 0;
    IntPoly prev(1);
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        // pick the smallest nonzero pivot to limit coefficient growth
        size_t best = m.size();
        for (size_t i = rank; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            if (best == m.size() || compare_pivot(m[i][col], m[best][col]) < 0) best = i;
        }
        if (best == m.size()) continue;
        std::swap(m[rank], m[best]);
        const IntPoly pivot = m[rank][col];
        for (size_t i = rank + 1; i < m.size(); ++i) {
            const IntPoly factor = m[i][col];
            for (size_t j = 0; j < cols; ++j)
                m[i][j] = divexact(pivot * m[i][j] - factor * m[rank][j], prev);
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace trihomo
