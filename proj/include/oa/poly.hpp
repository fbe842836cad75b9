#pragma once
// Exact polynomial arithmetic: dense univariate polynomials and sparse
// multivariate polynomials over the rationals. Multivariate monomials are
// packed into one 64-bit word (12 bits per variable, highest-priority
// variable in the top bits), so lexicographic comparison is word comparison.

#include "oa/rat.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oa {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rat& constant) { c_.push_back(constant); normalize(); }  // NOLINT: implicit
    UniPoly(int constant) : UniPoly(Rat(constant)) {}                      // NOLINT: implicit
    static UniPoly x();
    static UniPoly from_coeffs(std::vector<Rat> coeffs);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& k) const;
    UniPoly operator-() const { return *this * Rat(-1); }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;  // requires integer coefficients

    UniPoly monic() const;
    // Quotient and remainder; throws std::domain_error on zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> c_;  // c_[i] multiplies x^i; highest entry nonzero
};

// Generalized binomial coefficient C(p, ell) = p(p-1)...(p-ell+1)/ell!.
UniPoly binom_poly(const UniPoly& p, unsigned ell);
Rat binom_poly(const Rat& x, unsigned ell);

// Falling factorial (z)_i = z(z-1)...(z-i+1); (z)_0 = 1.
UniPoly falling_factorial(const UniPoly& z, unsigned i);
Rat falling_factorial(const Rat& z, unsigned i);

// --- sparse multivariate polynomials -------------------------------------

// Packed exponent vector; variable 0 has lexicographic priority.
using Mono = std::uint64_t;

constexpr unsigned kMonoBits = 12;               // bits per variable
constexpr unsigned kMonoMaxVars = 5;             // fits 5 x 12 = 60 bits
constexpr Mono kMonoFieldMask = (Mono(1) << kMonoBits) - 1;

Mono mono_pack(const std::vector<unsigned>& exps);
std::vector<unsigned> mono_unpack(Mono m, int nvars);
unsigned mono_exp(Mono m, int var, int nvars);
bool mono_divides(Mono a, Mono b, int nvars);  // a | b componentwise
Mono mono_mul(Mono a, Mono b, int nvars);      // checked add of exponents
Mono mono_div(Mono b, Mono a);                 // requires mono_divides(a,b)
Mono mono_lcm(Mono a, Mono b, int nvars);
unsigned mono_total_degree(Mono m, int nvars);

class MultiPoly {
public:
    explicit MultiPoly(int nvars = 1);
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly var(int nvars, int i, unsigned power = 1);
    // Embeds a univariate polynomial as a polynomial in variable `i`.
    static MultiPoly from_unipoly(int nvars, int i, const UniPoly& p);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // Terms in descending lex order, leading term first.
    const std::map<Mono, Rat, std::greater<Mono>>& terms() const { return terms_; }

    void add_term(Mono m, const Rat& c);
    void add_term(const std::vector<unsigned>& exps, const Rat& c);

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& k) const;
    MultiPoly operator-() const { return *this * Rat(-1); }

    Mono leading_mono() const;   // throws std::domain_error on zero
    Rat leading_coeff() const;
    unsigned total_degree() const;
    unsigned degree_in(int var) const;

    Rat eval(const std::vector<Rat>& xs) const;
    // Substitutes variable `var` by the constant c (variable count unchanged).
    MultiPoly substituted(int var, const Rat& c) const;
    bool is_univariate_in(int var) const;
    UniPoly to_unipoly(int var) const;  // requires is_univariate_in(var)

    // Divides by the rational content; zero polynomial stays zero.
    MultiPoly primitive_part() const;
    MultiPoly monic() const;
    // Exact multivariate division; nullopt when the remainder is nonzero.
    std::optional<MultiPoly> try_divide(const MultiPoly& d) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Mono, Rat, std::greater<Mono>> terms_;
};

}  // namespace oa
