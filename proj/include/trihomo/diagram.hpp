#pragma once

// The trisection-diagram data model at homology level: three ordered
// families of g rows over a fixed genus-g symplectic space, plus the
// cut-system validation (isotropy, Lagrangian rank, Heegaard-pair homology
// and sphere bookkeeping).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trihomo/errors.hpp"
#include "trihomo/snf.hpp"
#include "trihomo/symplectic.hpp"

namespace trihomo {

enum class Family : int { alpha = 0, beta = 1, gamma = 2 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::alpha: return "alpha";
        case Family::beta: return "beta";
        case Family::gamma: return "gamma";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "alpha") return Family::alpha;
    if (s == "beta") return Family::beta;
    if (s == "gamma") return Family::gamma;
    throw ParseError("unknown family '" + std::string(s) + "' (want alpha|beta|gamma)");
}

constexpr std::array<Family, 3> all_families{Family::alpha, Family::beta, Family::gamma};

struct TrisectionMatrix {
    SymplecticSpace space;
    std::array<std::vector<HClass>, 3> rows;  // rows[family][i], i in 0..g-1
    std::string label;

    int genus() const { return space.genus; }

    const std::vector<HClass>& family(Family f) const { return rows[static_cast<size_t>(f)]; }
    std::vector<HClass>& family(Family f) { return rows[static_cast<size_t>(f)]; }

    bool is_constant() const {
        for (const auto& fam : rows)
            for (const HClass& r : fam)
                if (!r.is_constant()) return false;
        return true;
    }
};

// Shape-checked constructor; deep validation (isotropy, rank) is validate().
inline TrisectionMatrix new_trisection_matrix(SymplecticSpace space, std::vector<HClass> alpha,
                                              std::vector<HClass> beta, std::vector<HClass> gamma,
                                              std::string label = {}) {
    if (space.genus < 0) throw DimensionError("negative genus");
    const size_t g = static_cast<size_t>(space.genus);
    const size_t dim = static_cast<size_t>(space.dimension());
    const std::array<const std::vector<HClass>*, 3> fams{&alpha, &beta, &gamma};
    for (size_t f = 0; f < 3; ++f) {
        if (fams[f]->size() != g)
            throw DimensionError(std::string(family_name(static_cast<Family>(f))) + " has " +
                                 std::to_string(fams[f]->size()) + " rows, want " + std::to_string(g));
        for (const HClass& r : *fams[f])
            if (r.size() != dim)
                throw DimensionError(std::string(family_name(static_cast<Family>(f))) +
                                     " row has length " + std::to_string(r.size()) + ", want " +
                                     std::to_string(dim));
    }
    return TrisectionMatrix{space, {std::move(alpha), std::move(beta), std::move(gamma)}, std::move(label)};
}

inline TrisectionMatrix evaluate(const TrisectionMatrix& d, Int128 n0) {
    TrisectionMatrix out = d;
    for (auto& fam : out.rows)
        for (HClass& r : fam) r = r.evaluate(n0);
    return out;
}

// Location of the first entry where the two matrices differ, or the genus
// mismatch; empty when equal. Row/column indices are 1-based.
inline std::optional<std::string> first_difference(const TrisectionMatrix& a, const TrisectionMatrix& b) {
    if (a.genus() != b.genus())
        return "genus mismatch: " + std::to_string(a.genus()) + " vs " + std::to_string(b.genus());
    for (Family f : all_families)
        for (size_t i = 0; i < a.family(f).size(); ++i)
            for (size_t k = 0; k < a.family(f)[i].size(); ++k)
                if (!(a.family(f)[i][k] == b.family(f)[i][k]))
                    return std::string(family_name(f)) + "[" + std::to_string(i + 1) + "][" +
                           std::to_string(k + 1) + "]: " + a.family(f)[i][k].str() + " vs " +
                           b.family(f)[i][k].str();
    return std::nullopt;
}

// Entrywise polynomial equality of all 3g rows, same order. Labels are not
// compared; a genus mismatch is just "not equal".
inline bool equal(const TrisectionMatrix& a, const TrisectionMatrix& b) {
    return !first_difference(a, b).has_value();
}

struct PairHomology {
    Family first = Family::alpha;
    Family second = Family::beta;
    Cokernel cokernel;  // Z^{2g} / rowspan of the stacked 2g x 2g matrix
};

// Heegaard-pair homology of the three stacked pairs at one value of n
// (n0 empty when the matrix was concrete to begin with).
struct PairReport {
    std::optional<long long> n0;
    std::array<PairHomology, 3> pairs;
    bool torsion_free = false;    // all three pairs
    bool euler_consistent = false;  // k_1 + k_2 + k_3 == g
};

struct ValidationReport {
    int genus = 0;
    std::array<bool, 3> isotropy_ok{};
    std::array<int, 3> lagrangian_rank{};
    std::vector<PairReport> pair_homology;
    bool euler_consistent = true;  // every evaluated report, vacuously true
    std::vector<std::string> notes;

    bool families_ok() const {
        for (bool ok : isotropy_ok)
            if (!ok) return false;
        for (int r : lagrangian_rank)
            if (r != genus) return false;
        return true;
    }
    bool torsion_free() const {
        for (const PairReport& p : pair_homology)
            if (!p.torsion_free) return false;
        return true;
    }
    // Sphere bookkeeping (euler_consistent) is reported as a warning, not a
    // failure: the tool also accepts diagrams of non-spheres.
    bool all_ok() const { return families_ok() && torsion_free(); }
};

namespace detail {
inline PairReport pair_report(const TrisectionMatrix& d, std::optional<long long> n0) {
    const size_t dim = static_cast<size_t>(d.space.dimension());
    constexpr std::array<std::pair<Family, Family>, 3> pairs{
        {{Family::alpha, Family::beta}, {Family::beta, Family::gamma}, {Family::gamma, Family::alpha}}};
    PairReport rep;
    rep.n0 = n0;
    int ksum = 0;
    bool torsion_free = true;
    for (size_t p = 0; p < 3; ++p) {
        std::vector<HClass> stacked = d.family(pairs[p].first);
        const auto& second = d.family(pairs[p].second);
        stacked.insert(stacked.end(), second.begin(), second.end());
        Cokernel c = cokernel_of_rows(to_int_matrix(stacked), dim);
        ksum += c.free_rank;
        torsion_free = torsion_free && c.torsion_free();
        rep.pairs[p] = PairHomology{pairs[p].first, pairs[p].second, std::move(c)};
    }
    rep.torsion_free = torsion_free;
    rep.euler_consistent = ksum == d.genus();
    return rep;
}
}  // namespace detail

// Symbolic isotropy/rank checks always run; pair homology runs for each
// requested n0, plus once directly when the matrix is already concrete.
// Failures are reported, never thrown.
inline ValidationReport validate(const TrisectionMatrix& d, const std::vector<long long>& evaluate_at = {}) {
    ValidationReport rep;
    rep.genus = d.genus();

    for (size_t f = 0; f < 3; ++f) {
        const auto& fam = d.rows[f];
        bool iso = true;
        for (size_t i = 0; i < fam.size() && iso; ++i)
            for (size_t j = i + 1; j < fam.size() && iso; ++j)
                iso = pairing(fam[i], fam[j]).is_zero();
        rep.isotropy_ok[f] = iso;
        if (!iso)
            rep.notes.push_back(std::string(family_name(static_cast<Family>(f))) +
                                ": rows are not pairwise disjoint in homology");
        rep.lagrangian_rank[f] = fam.empty() ? 0 : rank_over_fraction_field(fam);
        if (rep.lagrangian_rank[f] != d.genus())
            rep.notes.push_back(std::string(family_name(static_cast<Family>(f))) + ": rank " +
                                std::to_string(rep.lagrangian_rank[f]) + " != genus " +
                                std::to_string(d.genus()));
    }

    if (d.is_constant() && evaluate_at.empty() && d.genus() > 0)
        rep.pair_homology.push_back(detail::pair_report(d, std::nullopt));
    for (long long n0 : evaluate_at) {
        if (n0 < 1)
            rep.notes.push_back("warning: evaluation at n=" + std::to_string(n0) +
                                " is outside the family's range (n >= 1)");
        rep.pair_homology.push_back(detail::pair_report(evaluate(d, Int128(n0)), n0));
    }

    for (const PairReport& p : rep.pair_homology) {
        if (!p.torsion_free) {
            std::string at = p.n0 ? " at n=" + std::to_string(*p.n0) : "";
            rep.notes.push_back("pair homology has torsion" + at +
                                ": not a #(S^1xS^2) Heegaard pair");
        }
        if (!p.euler_consistent) {
            std::string at = p.n0 ? " at n=" + std::to_string(*p.n0) : "";
            rep.euler_consistent = false;
            rep.notes.push_back("warning: sphere bookkeeping" + at +
                                ": free ranks do not sum to the genus");
        }
    }
    return rep;
}

}  // namespace trihomo
