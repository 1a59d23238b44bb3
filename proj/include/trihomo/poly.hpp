#pragma once

// Integer-coefficient polynomials in the single parameter n. This is the
// entry type of every matrix in the library; arithmetic is exact via the
// checked 128-bit integers.
//
// Canonical text form: "0", a plain integer for degree 0, otherwise the
// constant term followed by the nonzero higher terms with explicit signs
// and explicit coefficients, e.g. "3+2n", "-2-2n", "0+1n", "1-1n^2".
// The parser accepts the looser grammar
//     -?\d+(\s*[+-]\s*\d*\s*\*?\s*n(\^\d+)?)*
// so "-2 - 2*n" and "5+n" are fine on input.

#include <string>
#include <string_view>
#include <vector>

#include "trihomo/checked_int.hpp"
#include "trihomo/errors.hpp"

namespace trihomo {

class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(int c) : IntPoly(Int128(c)) {}
    IntPoly(long long c) : IntPoly(Int128(c)) {}
    IntPoly(Int128 c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    // The polynomial "n".
    static IntPoly variable() {
        IntPoly p;
        p.coeffs_ = {Int128(0), Int128(1)};
        return p;
    }

    // Ascending-degree coefficients; trailing zeros are stripped.
    static IntPoly from_coeffs(std::vector<Int128> coeffs) {
        IntPoly p;
        p.coeffs_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Int128 coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int128(0); }
    const std::vector<Int128>& coeffs() const { return coeffs_; }

    // Value of a constant polynomial.
    Int128 constant_value() const {
        if (!is_constant()) throw SymbolicEntryError("polynomial is not constant; evaluate first");
        return coeff(0);
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int128> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return from_coeffs(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int128> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
        return from_coeffs(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int128> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int128(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a) { return IntPoly() - a; }

    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Exact substitution n <- n0 (Horner).
    Int128 evaluate(Int128 n0) const {
        Int128 r(0);
        for (size_t k = coeffs_.size(); k-- > 0;) r = r * n0 + coeffs_[k];
        return r;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out = to_string(coeffs_[0]);
        for (size_t k = 1; k < coeffs_.size(); ++k) {
            const Int128& c = coeffs_[k];
            if (c.is_zero()) continue;
            out += c.sign() > 0 ? '+' : '-';
            out += to_string(abs(c));
            out += 'n';
            if (k >= 2) out += '^' + std::to_string(k);
        }
        return out;
    }

    static IntPoly parse(std::string_view text);

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Int128> coeffs_;  // coeffs_[k] multiplies n^k; no trailing zeros
};

// Total order on polynomials, used for canonical keys: by degree, then by
// coefficients from the highest power down.
inline int compare(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = a.degree(); k >= 0; --k) {
        auto c = a.coeff(static_cast<size_t>(k)) <=> b.coeff(static_cast<size_t>(k));
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

// Quotient of an exact division; throws if b does not divide a.
inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Int128> rem(a.coeffs());
    std::vector<Int128> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Int128(0));
    const Int128 lead = b.coeff(static_cast<size_t>(b.degree()));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int128 top = rem[static_cast<size_t>(k + b.degree())];
        if (!(top % lead).is_zero()) throw std::domain_error("inexact polynomial division");
        Int128 q = top / lead;
        quo[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.coeff(static_cast<size_t>(j));
    }
    for (const Int128& r : rem)
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return IntPoly::from_coeffs(std::move(quo));
}

// Sum of absolute coefficient values; the "how far from zero" metric used
// by pivot selection and the standardness defect.
inline Int128 coeff_size(const IntPoly& p) {
    Int128 s(0);
    for (const Int128& c : p.coeffs()) s += abs(c);
    return s;
}

inline IntPoly IntPoly::parse(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto at_end = [&] {
        skip_ws();
        return i == text.size();
    };
    auto read_uint = [&]() -> Int128 {
        size_t start = i;
        Int128 r(0);
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            r = r * Int128(10) + Int128(text[i] - '0');
            ++i;
        }
        if (i == start) throw ParseError("expected digits in polynomial '" + std::string(text) + "'");
        return r;
    };

    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial");

    // Leading integer term (sign optional).
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    skip_ws();
    Int128 c0 = read_uint();
    std::vector<Int128> coeffs{neg ? -c0 : c0};

    while (!at_end()) {
        char sign = text[i];
        if (sign != '+' && sign != '-')
            throw ParseError("expected '+' or '-' in polynomial '" + std::string(text) + "'");
        ++i;
        skip_ws();
        Int128 c(1);
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') c = read_uint();
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        if (i == text.size() || text[i] != 'n')
            throw ParseError("expected 'n' in polynomial '" + std::string(text) + "'");
        ++i;
        size_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            Int128 e = read_uint();
            if (e <= Int128(0) || e > Int128(64))
                throw ParseError("unsupported exponent in polynomial '" + std::string(text) + "'");
            exp = static_cast<size_t>(e.to_int64());
        }
        if (coeffs.size() < exp + 1) coeffs.resize(exp + 1, Int128(0));
        coeffs[exp] += sign == '-' ? -c : c;
    }
    return from_coeffs(std::move(coeffs));
}

}  // namespace trihomo
