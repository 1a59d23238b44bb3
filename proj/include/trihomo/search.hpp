#pragma once

// Bounded discovery of standardization certificates: iterative-deepening
// DFS over slides and twists, states deduplicated by a canonical key that
// is blind to Permute/Negate moves and cyclic family relabeling, children
// ordered by standardness defect. Failure means "not found within budget",
// never "not homologically standard".

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trihomo/certificate.hpp"
#include "trihomo/corpus.hpp"
#include "trihomo/standardness.hpp"

namespace trihomo {

enum class TwistVocabulary { basis_vectors, family_rows, row_differences };

inline TwistVocabulary parse_twist_vocabulary(std::string_view s) {
    if (s == "basis") return TwistVocabulary::basis_vectors;
    if (s == "rows") return TwistVocabulary::family_rows;
    if (s == "diffs") return TwistVocabulary::row_differences;
    throw ParseError("unknown twist vocabulary '" + std::string(s) + "' (want basis|rows|diffs)");
}

struct SearchBudget {
    int max_depth = 4;
    long long max_states = 100000;
    std::optional<int> beam_width;
    int coefficient_bound = 2;
    TwistVocabulary twist_vocabulary = TwistVocabulary::basis_vectors;
};

struct SearchStats {
    long long states_expanded = 0;
    int depth_reached = 0;
    bool budget_exhausted = false;
};

struct SearchResult {
    std::optional<Certificate> certificate;
    SearchStats stats;
};

inline std::vector<Move> cert_moves(const Certificate& cert) {
    std::vector<Move> moves;
    moves.reserve(cert.steps.size());
    for (const CertStep& s : cert.steps) moves.push_back(s.move);
    return moves;
}

namespace detail {

// Flip a row so its first nonzero coefficient (scanning entries in order,
// each entry's coefficients by ascending degree) is positive.
inline HClass sign_normalized(const HClass& r) {
    for (const IntPoly& e : r.entries())
        for (const Int128& c : e.coeffs()) {
            if (c.is_zero()) continue;
            return c.sign() < 0 ? -r : r;
        }
    return r;
}

inline int compare_rows(const HClass& a, const HClass& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (int c = compare(a[k], b[k])) return c;
    return 0;
}

inline std::string family_block(const std::vector<HClass>& fam) {
    std::vector<HClass> rows;
    rows.reserve(fam.size());
    for (const HClass& r : fam) rows.push_back(sign_normalized(r));
    std::sort(rows.begin(), rows.end(), [](const HClass& a, const HClass& b) { return compare_rows(a, b) < 0; });
    std::string out;
    for (const HClass& r : rows) {
        for (size_t k = 0; k < r.size(); ++k) {
            out += r[k].str();
            out += ',';
        }
        out += ';';
    }
    return out;
}

}  // namespace detail

// Canonical state key: invariant under Permute and Negate moves and under
// cyclic relabeling of the three families.
inline std::string canonical_key(const TrisectionMatrix& d) {
    std::array<std::string, 3> blocks;
    for (size_t f = 0; f < 3; ++f) blocks[f] = detail::family_block(d.rows[f]);
    std::string best;
    for (size_t rot = 0; rot < 3; ++rot) {
        std::string key = blocks[rot] + '|' + blocks[(rot + 1) % 3] + '|' + blocks[(rot + 2) % 3];
        if (rot == 0 || key < best) best = std::move(key);
    }
    return best;
}

namespace detail {

inline std::vector<HClass> twist_vectors(const TrisectionMatrix& d, TwistVocabulary vocab) {
    std::vector<HClass> out;
    auto push_unique = [&](HClass v) {
        if (v.is_zero() || !v.is_constant()) return;
        v = sign_normalized(v);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    };
    switch (vocab) {
        case TwistVocabulary::basis_vectors:
            for (int i = 1; i <= d.space.dimension(); ++i) push_unique(HClass::basis_vector(d.space, i));
            break;
        case TwistVocabulary::family_rows:
            for (const auto& fam : d.rows)
                for (const HClass& r : fam) push_unique(r);
            break;
        case TwistVocabulary::row_differences:
            for (const auto& fam : d.rows)
                for (size_t i = 0; i < fam.size(); ++i)
                    for (size_t j = i + 1; j < fam.size(); ++j) push_unique(fam[i] - fam[j]);
            break;
    }
    return out;
}

inline std::vector<Move> enumerate_moves(const TrisectionMatrix& d, const SearchBudget& budget) {
    std::vector<Move> out;
    const int g = d.genus();
    for (Family f : all_families)
        for (int i = 1; i <= g; ++i)
            for (int j = 1; j <= g; ++j) {
                if (i == j) continue;
                for (int c = 1; c <= budget.coefficient_bound; ++c) {
                    out.push_back(SlideMove{f, i, j, IntPoly(c)});
                    out.push_back(SlideMove{f, i, j, IntPoly(-c)});
                }
            }
    for (const HClass& v : twist_vectors(d, budget.twist_vocabulary))
        for (int c = 1; c <= budget.coefficient_bound; ++c) {
            out.push_back(TwistMove{v, IntPoly(c)});
            out.push_back(TwistMove{v, IntPoly(-c)});
        }
    return out;
}

struct SearchNode {
    TrisectionMatrix state;
    Move via;
    std::uint64_t defect;
    std::string key;
};

}  // namespace detail

// Iterative-deepening search for a move sequence whose replay ends in
// standard position. Deterministic for a fixed input and budget; enlarging
// the budget never loses a previously found certificate.
inline SearchResult find_certificate(const TrisectionMatrix& d, const SearchBudget& budget) {
    SearchResult res;
    auto make_certificate = [&](const std::vector<Move>& path) {
        Certificate cert;
        cert.genus = d.genus();
        cert.symbolic = !d.is_constant();
        if (!d.label.empty()) cert.source = d.label;
        for (const Move& mv : path) cert.steps.push_back(CertStep{mv, std::nullopt});
        // never trust the search: replay and re-check the witness
        if (!is_standard_position(compose_apply(d, cert_moves(cert))))
            throw std::logic_error("search produced a certificate that does not replay to standard position");
        return cert;
    };

    if (is_standard_position(d)) {
        res.certificate = make_certificate({});
        return res;
    }

    bool exhausted = false;
    std::vector<Move> path;
    std::map<std::string, int> visited;  // canonical key -> largest remaining depth already searched

    auto dfs = [&](auto&& self, const TrisectionMatrix& cur, int remaining) -> bool {
        if (res.stats.states_expanded >= budget.max_states) {
            exhausted = true;
            return false;
        }
        ++res.stats.states_expanded;

        std::vector<detail::SearchNode> children;
        for (const Move& mv : detail::enumerate_moves(cur, budget)) {
            TrisectionMatrix next = apply_move(cur, mv);
            std::uint64_t defect = standardness_defect(next);
            std::string key = canonical_key(next);
            children.push_back(detail::SearchNode{std::move(next), mv, defect, std::move(key)});
        }
        std::stable_sort(children.begin(), children.end(),
                         [](const detail::SearchNode& a, const detail::SearchNode& b) {
                             return a.defect != b.defect ? a.defect < b.defect : a.key < b.key;
                         });
        if (budget.beam_width && static_cast<int>(children.size()) > *budget.beam_width)
            children.resize(static_cast<size_t>(*budget.beam_width));

        for (const detail::SearchNode& child : children) {
            path.push_back(child.via);
            if (child.defect == 0) return true;
            if (remaining > 1) {
                auto it = visited.find(child.key);
                if (it == visited.end() || it->second < remaining - 1) {
                    visited[child.key] = remaining - 1;
                    if (self(self, child.state, remaining - 1)) return true;
                }
            }
            path.pop_back();
            if (exhausted) return false;
        }
        return false;
    };

    for (int limit = 1; limit <= budget.max_depth && !exhausted; ++limit) {
        res.stats.depth_reached = limit;
        visited.clear();
        visited[canonical_key(d)] = limit;
        path.clear();
        if (dfs(dfs, d, limit)) {
            res.certificate = make_certificate(path);
            return res;
        }
    }
    res.stats.budget_exhausted = exhausted;
    return res;
}

}  // namespace trihomo
