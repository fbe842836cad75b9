#include "oa/poly.hpp"

#include <sstream>

namespace oa {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::x() {
    UniPoly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rat> coeffs) {
    UniPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.normalize();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) - o.coeff(i);
    r.normalize();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UniPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.normalize();
    return r;
}

UniPoly UniPoly::operator*(const Rat& k) const {
    UniPoly r;
    r.c_.reserve(c_.size());
    for (const auto& a : c_) r.c_.push_back(a * k);
    r.normalize();
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Int UniPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_int(c_[i]);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rat(1) / c_.back());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
    UniPoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Rat f = r.c_.back() / d.c_.back();
        std::vector<Rat> t(static_cast<std::size_t>(k) + 1, Rat(0));
        t.back() = f;
        UniPoly m = UniPoly::from_coeffs(std::move(t));
        q = q + m;
        r = r - m * d;
    }
    return {q, r};
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1) && i > 0;
        if (!unit) os << rat_to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly binom_poly(const UniPoly& p, unsigned ell) {
    UniPoly r(Rat(1));
    for (unsigned i = 0; i < ell; ++i) r = r * (p - UniPoly(Rat(static_cast<long>(i))));
    return r * make_rat(1, factorial_int(ell));
}

Rat binom_poly(const Rat& x, unsigned ell) {
    Rat r(1);
    for (unsigned i = 0; i < ell; ++i) r *= x - Rat(static_cast<long>(i));
    return r / Rat(factorial_int(ell));
}

UniPoly falling_factorial(const UniPoly& z, unsigned i) {
    UniPoly r(Rat(1));
    for (unsigned k = 0; k < i; ++k) r = r * (z - UniPoly(Rat(static_cast<long>(k))));
    return r;
}

Rat falling_factorial(const Rat& z, unsigned i) {
    Rat r(1);
    for (unsigned k = 0; k < i; ++k) r *= z - Rat(static_cast<long>(k));
    return r;
}

// --- monomial packing ------------------------------------------------------

Mono mono_pack(const std::vector<unsigned>& exps) {
    if (exps.size() > kMonoMaxVars) throw std::invalid_argument("mono_pack: too many variables");
    Mono m = 0;
    for (unsigned e : exps) {
        if (e > kMonoFieldMask) throw std::overflow_error("mono_pack: exponent too large");
        m = (m << kMonoBits) | e;
    }
    return m;
}

std::vector<unsigned> mono_unpack(Mono m, int nvars) {
    std::vector<unsigned> exps(nvars);
    for (int i = nvars - 1; i >= 0; --i) {
        exps[i] = static_cast<unsigned>(m & kMonoFieldMask);
        m >>= kMonoBits;
    }
    return exps;
}

unsigned mono_exp(Mono m, int var, int nvars) {
    const unsigned shift = kMonoBits * static_cast<unsigned>(nvars - 1 - var);
    return static_cast<unsigned>((m >> shift) & kMonoFieldMask);
}

bool mono_divides(Mono a, Mono b, int nvars) {
    for (int i = 0; i < nvars; ++i) {
        if ((a & kMonoFieldMask) > (b & kMonoFieldMask)) return false;
        a >>= kMonoBits;
        b >>= kMonoBits;
    }
    return true;
}

Mono mono_mul(Mono a, Mono b, int nvars) {
    Mono r = a + b;
    // Componentwise overflow check: each field of r must dominate both inputs.
    for (int i = 0; i < nvars; ++i) {
        const unsigned shift = kMonoBits * static_cast<unsigned>(i);
        const Mono fa = (a >> shift) & kMonoFieldMask;
        const Mono fb = (b >> shift) & kMonoFieldMask;
        const Mono fr = (r >> shift) & kMonoFieldMask;
        if (fr < fa || fr < fb) throw std::overflow_error("mono_mul: exponent overflow");
    }
    return r;
}

Mono mono_div(Mono b, Mono a) { return b - a; }

Mono mono_lcm(Mono a, Mono b, int nvars) {
    Mono r = 0;
    for (int i = nvars - 1; i >= 0; --i) {
        const unsigned shift = kMonoBits * static_cast<unsigned>(nvars - 1 - i);
        const Mono fa = (a >> shift) & kMonoFieldMask;
        const Mono fb = (b >> shift) & kMonoFieldMask;
        r |= (fa > fb ? fa : fb) << shift;
    }
    return r;
}

unsigned mono_total_degree(Mono m, int nvars) {
    unsigned d = 0;
    for (int i = 0; i < nvars; ++i) {
        d += static_cast<unsigned>(m & kMonoFieldMask);
        m >>= kMonoBits;
    }
    return d;
}

// --- MultiPoly ---------------------------------------------------------------

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > static_cast<int>(kMonoMaxVars))
        throw std::invalid_argument("MultiPoly: bad variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Mono(0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i, unsigned power) {
    MultiPoly p(nvars);
    std::vector<unsigned> exps(nvars, 0);
    exps.at(i) = power;
    p.add_term(exps, Rat(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(int nvars, int i, const UniPoly& u) {
    MultiPoly p(nvars);
    std::vector<unsigned> exps(nvars, 0);
    for (int d = 0; d <= u.degree(); ++d) {
        exps.at(i) = static_cast<unsigned>(d);
        p.add_term(exps, u.coeff(d));
    }
    return p;
}

void MultiPoly::add_term(Mono m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("add_term: arity mismatch");
    add_term(mono_pack(exps), c);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2, nvars_), c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& k) const {
    MultiPoly r(nvars_);
    if (k == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

Mono MultiPoly::leading_mono() const {
    if (terms_.empty()) throw std::domain_error("leading_mono: zero polynomial");
    return terms_.begin()->first;
}

Rat MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff: zero polynomial");
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m, nvars_));
    return d;
}

unsigned MultiPoly::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_exp(m, var, nvars_));
    return d;
}

Rat MultiPoly::eval(const std::vector<Rat>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_) throw std::invalid_argument("eval: arity mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int v = 0; v < nvars_; ++v) {
            const unsigned e = mono_exp(m, v, nvars_);
            if (e) t *= rat_pow(xs[v], e);
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substituted(int var, const Rat& c) const {
    MultiPoly r(nvars_);
    for (const auto& [m, coef] : terms_) {
        const unsigned e = mono_exp(m, var, nvars_);
        const Mono cleared = m - (Mono(e) << (kMonoBits * static_cast<unsigned>(nvars_ - 1 - var)));
        r.add_term(cleared, e ? coef * rat_pow(c, e) : coef);
    }
    return r;
}

bool MultiPoly::is_univariate_in(int var) const {
    for (const auto& [m, c] : terms_)
        for (int v = 0; v < nvars_; ++v)
            if (v != var && mono_exp(m, v, nvars_) != 0) return false;
    return true;
}

UniPoly MultiPoly::to_unipoly(int var) const {
    if (!is_univariate_in(var)) throw std::domain_error("to_unipoly: polynomial not univariate");
    std::vector<Rat> c(degree_in(var) + 1, Rat(0));
    for (const auto& [m, coef] : terms_) c[mono_exp(m, var, nvars_)] = coef;
    return UniPoly::from_coeffs(std::move(c));
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    // content = gcd(numerators) / lcm(denominators), signed to make lc > 0
    Int g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        g = gcd(g, c.get_num());
        l = lcm(l, c.get_den());
    }
    Rat content = make_rat(g, l);
    if (leading_coeff() < 0) content = -content;
    return *this * (Rat(1) / content);
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_coeff());
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("try_divide: division by zero");
    MultiPoly q(nvars_), r = *this;
    const Mono dm = d.leading_mono();
    const Rat dc = d.leading_coeff();
    while (!r.is_zero()) {
        const Mono rm = r.leading_mono();
        if (!mono_divides(dm, rm, nvars_)) return std::nullopt;
        const Mono qm = mono_div(rm, dm);
        const Rat qc = r.leading_coeff() / dc;
        MultiPoly t(nvars_);
        t.add_term(qm, qc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("to_string: arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool constant_mono = (m == 0);
        const bool unit = (a == 1) && !constant_mono;
        if (!unit) os << rat_to_string(a);
        bool printed = !unit;
        for (int v = 0; v < nvars_; ++v) {
            const unsigned e = mono_exp(m, v, nvars_);
            if (!e) continue;
            if (printed) os << "*";
            os << names[v];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

}  // namespace oa
