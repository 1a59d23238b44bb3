#pragma once

// Line-oriented move scripts with checkpoint assertions, and their replay.
//
//   # comment
//   genus 4
//   var n
//   source gluck_spun_torus_T
//   twist v=[0,0,1,0,0,0,0,0] k=1+2n
//   slide f=alpha i=4 j=2 m=-2-2n
//   negate f=beta i=1
//   permute f=gamma p=[2,1,3,4]
//   expect file=theorem2_step1.json
//   expect inline={"genus":...}
//
// An expect asserts the matrix right after the preceding move; an expect
// before any move asserts the starting matrix. Values contain no spaces
// except the inline JSON, which runs to the end of the line.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trihomo/matrix_io.hpp"
#include "trihomo/moves.hpp"
#include "trihomo/standardness.hpp"

namespace trihomo {

struct Expect {
    enum class Kind { file, inline_matrix };
    Kind kind = Kind::file;
    std::string file;
    nlohmann::json inline_doc;

    friend bool operator==(const Expect& a, const Expect& b) {
        return a.kind == b.kind && a.file == b.file && a.inline_doc == b.inline_doc;
    }
};

struct CertStep {
    Move move;
    std::optional<Expect> expect;

    friend bool operator==(const CertStep&, const CertStep&) = default;
};

struct Certificate {
    int genus = -1;
    bool symbolic = false;  // "var n" present
    std::string source;     // optional provenance: corpus id or file name
    std::optional<Expect> initial_expect;
    std::vector<CertStep> steps;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

struct CertLineParser {
    std::string_view line;
    int lineno;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, size_t col) const {
        throw ParseError(msg, lineno, static_cast<int>(col + 1));
    }

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == line.size();
    }
    std::string_view token() {
        skip_ws();
        size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        return line.substr(start, pos - start);
    }
    // key=value; the value runs to the next whitespace
    std::string_view value(std::string_view key) {
        size_t col = pos;
        std::string_view t = token();
        if (t.size() <= key.size() + 1 || t.substr(0, key.size()) != key || t[key.size()] != '=')
            fail("expected " + std::string(key) + "=<value>", col);
        return t.substr(key.size() + 1);
    }

    int int_value(std::string_view key) {
        std::string_view v = value(key);
        try {
            return static_cast<int>(Int128::parse(v).to_int64());
        } catch (const std::exception&) {
            fail("bad integer in " + std::string(key) + "=", pos);
        }
    }
    IntPoly poly_value(std::string_view key) {
        std::string_view v = value(key);
        try {
            return IntPoly::parse(v);
        } catch (const ParseError& e) {
            fail(std::string("bad polynomial in ") + std::string(key) + "=: " + e.what(), pos);
        }
    }
    std::vector<long long> list_value(std::string_view key) {
        std::string_view v = value(key);
        if (v.size() < 2 || v.front() != '[' || v.back() != ']')
            fail("expected " + std::string(key) + "=[..]", pos);
        std::vector<long long> out;
        std::string item;
        std::istringstream ss{std::string(v.substr(1, v.size() - 2))};
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(Int128::parse(item).to_int64());
            } catch (const std::exception&) {
                fail("bad list entry '" + item + "'", pos);
            }
        }
        return out;
    }
};

}  // namespace detail

inline Family parse_family_at(detail::CertLineParser& p) {
    size_t col = p.pos;
    std::string_view v = p.value("f");
    try {
        return parse_family(v);
    } catch (const ParseError& e) {
        p.fail(e.what(), col);
    }
}

inline Certificate parse_certificate(std::string_view text) {
    Certificate cert;
    bool genus_seen = false;
    std::istringstream stream{std::string(text)};
    std::string raw;
    int lineno = 0;

    while (std::getline(stream, raw)) {
        ++lineno;
        std::string_view line{raw};
        if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        detail::CertLineParser p{line, lineno};
        if (p.done()) continue;
        std::string_view directive = p.token();

        auto need_genus = [&] {
            if (!genus_seen) p.fail("'genus' must come before moves and expects", 0);
        };

        if (directive == "genus") {
            size_t col = p.pos;
            std::string_view v = p.token();
            try {
                cert.genus = static_cast<int>(Int128::parse(v).to_int64());
            } catch (const std::exception&) {
                p.fail("bad genus", col);
            }
            if (cert.genus < 0) p.fail("negative genus", col);
            genus_seen = true;
        } else if (directive == "var") {
            size_t col = p.pos;
            if (p.token() != "n") p.fail("only the variable 'n' is supported", col);
            cert.symbolic = true;
        } else if (directive == "source") {
            cert.source = std::string(p.token());
        } else if (directive == "slide") {
            need_genus();
            SlideMove mv;
            mv.family = parse_family_at(p);
            mv.i = p.int_value("i");
            mv.j = p.int_value("j");
            mv.m = p.poly_value("m");
            if (mv.i == mv.j) p.fail("slide with i == j", 0);
            try {
                check_move(Move{mv}, SymplecticSpace{cert.genus});
            } catch (const MoveError& e) {
                p.fail(e.what(), 0);
            }
            cert.steps.push_back(CertStep{Move{std::move(mv)}, std::nullopt});
        } else if (directive == "twist") {
            need_genus();
            TwistMove mv;
            std::vector<IntPoly> entries;
            for (long long c : p.list_value("v")) entries.emplace_back(c);
            mv.v = HClass(std::move(entries));
            mv.k = p.poly_value("k");
            try {
                check_move(Move{mv}, SymplecticSpace{cert.genus});
            } catch (const MoveError& e) {
                p.fail(e.what(), 0);
            }
            cert.steps.push_back(CertStep{Move{std::move(mv)}, std::nullopt});
        } else if (directive == "negate") {
            need_genus();
            NegateMove mv;
            mv.family = parse_family_at(p);
            mv.i = p.int_value("i");
            try {
                check_move(Move{mv}, SymplecticSpace{cert.genus});
            } catch (const MoveError& e) {
                p.fail(e.what(), 0);
            }
            cert.steps.push_back(CertStep{Move{mv}, std::nullopt});
        } else if (directive == "permute") {
            need_genus();
            PermuteMove mv;
            mv.family = parse_family_at(p);
            for (long long x : p.list_value("p")) mv.perm.push_back(static_cast<int>(x));
            if (!is_valid_permutation(mv.perm, cert.genus))
                p.fail("p is not a permutation of 1.." + std::to_string(cert.genus), 0);
            cert.steps.push_back(CertStep{Move{std::move(mv)}, std::nullopt});
        } else if (directive == "expect") {
            need_genus();
            p.skip_ws();
            Expect e;
            std::string_view rest = line.substr(p.pos);
            if (rest.substr(0, 5) == "file=") {
                e.kind = Expect::Kind::file;
                detail::CertLineParser q{line, lineno};
                q.pos = p.pos;
                e.file = std::string(q.value("file"));
                if (!q.done()) q.fail("trailing text after expect", q.pos);
            } else if (rest.substr(0, 7) == "inline=") {
                e.kind = Expect::Kind::inline_matrix;
                e.inline_doc = nlohmann::json::parse(rest.substr(7), nullptr, false);
                if (e.inline_doc.is_discarded()) p.fail("inline expect is not valid JSON", p.pos);
            } else {
                p.fail("expect needs file=<path> or inline=<json>", p.pos);
            }
            auto& slot = cert.steps.empty() ? cert.initial_expect : cert.steps.back().expect;
            if (slot.has_value()) p.fail("step already has an expect", 0);
            slot = std::move(e);
        } else {
            p.fail("unknown directive '" + std::string(directive) + "'", 0);
        }
    }
    if (!genus_seen) throw ParseError("certificate has no 'genus' line");
    return cert;
}

inline std::string serialize(const Certificate& cert) {
    std::ostringstream out;
    out << "genus " << cert.genus << "\n";
    if (cert.symbolic) out << "var n\n";
    if (!cert.source.empty()) out << "source " << cert.source << "\n";

    auto emit_expect = [&](const Expect& e) {
        if (e.kind == Expect::Kind::file)
            out << "expect file=" << e.file << "\n";
        else
            out << "expect inline=" << e.inline_doc.dump() << "\n";
    };
    if (cert.initial_expect) emit_expect(*cert.initial_expect);

    for (const CertStep& step : cert.steps) {
        if (const auto* s = std::get_if<SlideMove>(&step.move)) {
            out << "slide f=" << family_name(s->family) << " i=" << s->i << " j=" << s->j
                << " m=" << s->m.str() << "\n";
        } else if (const auto* t = std::get_if<TwistMove>(&step.move)) {
            out << "twist v=[";
            for (size_t k = 0; k < t->v.size(); ++k)
                out << (k ? "," : "") << to_string(t->v[k].constant_value());
            out << "] k=" << t->k.str() << "\n";
        } else if (const auto* ng = std::get_if<NegateMove>(&step.move)) {
            out << "negate f=" << family_name(ng->family) << " i=" << ng->i << "\n";
        } else if (const auto* pm = std::get_if<PermuteMove>(&step.move)) {
            out << "permute f=" << family_name(pm->family) << " p=[";
            for (size_t k = 0; k < pm->perm.size(); ++k) out << (k ? "," : "") << pm->perm[k];
            out << "]\n";
        }
        if (step.expect) emit_expect(*step.expect);
    }
    return out.str();
}

inline Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_certificate(buf.str());
}

inline void write_certificate_file(const std::string& path, const Certificate& cert) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << serialize(cert);
    if (!out) throw IoError("failed writing " + path);
}

// Turns an Expect into the matrix it asserts.
using ExpectResolver = std::function<TrisectionMatrix(const Expect&)>;

// Looks file expects up under base_dir (absolute paths pass through).
inline ExpectResolver file_resolver(std::string base_dir) {
    return [base_dir = std::move(base_dir)](const Expect& e) {
        if (e.kind == Expect::Kind::inline_matrix) return matrix_from_json(e.inline_doc);
        std::string path = e.file;
        if (!base_dir.empty() && !path.empty() && path.front() != '/') path = base_dir + "/" + path;
        return read_matrix_file(path);
    };
}

struct ReplayOptions {
    bool strict = true;                    // stop at the first mismatch
    std::optional<long long> evaluate_at;  // replay at n = n0 instead of symbolically
};

struct StepOutcome {
    size_t index = 0;  // 1-based move index; 0 is the initial expect
    bool move_ok = true;
    std::string move_error;
    bool has_expect = false;
    bool expect_ok = true;
    std::string mismatch;

    bool ok() const { return move_ok && expect_ok; }
};

struct ReplayResult {
    bool ok = false;       // every move applied and every expect matched
    bool aborted = false;  // stopped early (strict mismatch or failed move)
    TrisectionMatrix final_matrix;
    std::vector<StepOutcome> steps;
    std::optional<StandardAssignment> standardness;  // of the matrix we ended on
};

inline ReplayResult replay(const TrisectionMatrix& start, const Certificate& cert,
                           const ReplayOptions& opts = {},
                           const ExpectResolver& resolve = file_resolver("")) {
    if (start.genus() != cert.genus)
        throw DimensionError("certificate genus " + std::to_string(cert.genus) +
                             " does not match matrix genus " + std::to_string(start.genus()));

    ReplayResult res;
    res.ok = true;
    TrisectionMatrix cur = opts.evaluate_at ? evaluate(start, Int128(*opts.evaluate_at)) : start;

    auto check_expect = [&](const Expect& e, StepOutcome& out) {
        out.has_expect = true;
        TrisectionMatrix want = resolve(e);
        if (opts.evaluate_at) want = evaluate(want, Int128(*opts.evaluate_at));
        if (auto diff = first_difference(cur, want)) {
            out.expect_ok = false;
            out.mismatch = *diff;
            res.ok = false;
        }
    };

    if (cert.initial_expect) {
        StepOutcome out;
        out.index = 0;
        check_expect(*cert.initial_expect, out);
        res.steps.push_back(out);
        if (!res.ok && opts.strict) {
            res.aborted = true;
            res.final_matrix = std::move(cur);
            res.standardness = is_standard_position(res.final_matrix);
            return res;
        }
    }

    for (size_t i = 0; i < cert.steps.size() && !res.aborted; ++i) {
        StepOutcome out;
        out.index = i + 1;
        try {
            Move mv = opts.evaluate_at ? evaluate(cert.steps[i].move, Int128(*opts.evaluate_at))
                                       : cert.steps[i].move;
            cur = apply_move(cur, mv);
        } catch (const MoveError& e) {
            out.move_ok = false;
            out.move_error = e.what();
            res.ok = false;
            res.aborted = true;  // the matrix after a failed move is undefined
        }
        if (out.move_ok && cert.steps[i].expect) {
            check_expect(*cert.steps[i].expect, out);
            if (!out.expect_ok && opts.strict) res.aborted = true;
        }
        res.steps.push_back(std::move(out));
    }

    res.final_matrix = std::move(cur);
    res.standardness = is_standard_position(res.final_matrix);
    return res;
}

// Reversed inverted steps with all assertions stripped; replaying it undoes
// the original certificate.
inline Certificate inverse_certificate(const Certificate& cert) {
    Certificate inv;
    inv.genus = cert.genus;
    inv.symbolic = cert.symbolic;
    for (size_t i = cert.steps.size(); i-- > 0;)
        inv.steps.push_back(CertStep{inverse(cert.steps[i].move), std::nullopt});
    return inv;
}

}  // namespace trihomo
