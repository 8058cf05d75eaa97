#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laumon/symbols.hpp"

namespace laumon {

using Int = mpz_class;

// Sparse Laurent monomial: sorted (symbol, exponent) pairs, exponents != 0.
struct Mono {
    std::vector<std::pair<Sym, int>> e;

    static Mono one() { return {}; }
    static Mono var(Sym s, int k = 1);

    bool is_one() const { return e.empty(); }
    int exp(Sym s) const;
    Mono mul(const Mono &o) const;
    Mono inv() const;
    Mono pow(int k) const;
    int total_degree() const;
    int degree_in(const std::vector<Sym> &vars) const;

    bool operator==(const Mono &o) const { return e == o.e; }
    bool operator<(const Mono &o) const;  // lexicographic by symbol id, then exponent
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
class Poly {
  public:
    using Terms = std::map<Mono, Int>;

    Poly() = default;
    explicit Poly(long c);
    explicit Poly(const Int &c);
    Poly(const Mono &m, const Int &c);

    static Poly var(Sym s, int k = 1);
    static Poly monomial(Sym s, int k, const Int &c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Terms &terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly mul_mono(const Mono &m, const Int &c = Int(1)) const;
    Poly pow(int k) const;  // k >= 0

    bool operator==(const Poly &o) const { return terms_ == o.terms_; }

    // Integer content (gcd of coefficients, positive); 0 for the zero poly.
    Int content() const;
    // Common monomial factor (min exponent per symbol across terms).
    Mono monomial_content() const;
    void divide_content(const Int &c);

    std::vector<Sym> symbols() const;
    bool involves(Sym s) const;
    int deg(Sym s) const;      // max exponent
    int low_deg(Sym s) const;  // min exponent
    int total_degree() const;
    bool is_homogeneous(const std::vector<Sym> &vars, int *deg_out = nullptr) const;

    // Coefficient of s^k (a polynomial in the remaining symbols).
    Poly coeff_of(Sym s, int k) const;
    // Leading coefficient and degree with respect to s.
    Poly lead_coeff(Sym s) const;

    // Substitute s -> value (a polynomial); s must not appear in value.
    Poly subst(Sym s, const Poly &value) const;
    // Substitute s -> c * m (monomial rescale), exact for Laurent exponents.
    Poly subst_mono(Sym s, const Mono &m, const Int &c = Int(1)) const;
    // Simultaneous variable renaming.
    Poly rename(const std::map<Sym, Sym> &map) const;
    // Multiply exponents of s into a fresh symbol xi as well: z -> xi * z for z in set.
    Poly scale_vars(const std::vector<Sym> &vars, Sym xi) const;

    // Exact division; nullopt if not divisible.
    std::optional<Poly> divide_exact(const Poly &divisor) const;

    uint64_t eval_mod(const std::map<Sym, uint64_t> &assign, uint64_t p) const;

    void add_term(const Mono &m, const Int &c);
    std::string str() const;

  private:
    Terms terms_;
};

Poly gcd(const Poly &a, const Poly &b);

// Rational function num/den with lazy normalization.  Cheap cleanups
// (integer content, monomial content, sign) are applied on construction;
// full gcd reduction happens only in reduce()/canonical paths.
class Rat {
  public:
    Rat() : num_(), den_(Poly(1)) {}
    Rat(long c) : num_(Poly(c)), den_(Poly(1)) {}
    explicit Rat(const Poly &n) : num_(n), den_(Poly(1)) { light_normalize(); }
    Rat(const Poly &n, const Poly &d);

    static Rat var(Sym s, int k = 1) { return Rat(Poly::var(s, k)); }

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    Rat operator-() const;
    Rat operator+(const Rat &o) const;
    Rat operator-(const Rat &o) const;
    Rat operator*(const Rat &o) const;
    Rat operator/(const Rat &o) const;
    Rat &operator+=(const Rat &o) { return *this = *this + o; }
    Rat &operator*=(const Rat &o) { return *this = *this * o; }
    Rat inv() const;
    Rat pow(int k) const;  // any integer k

    // Exact equality via cross-multiplication.
    bool operator==(const Rat &o) const;
    bool operator!=(const Rat &o) const { return !(*this == o); }

    // Full gcd reduction to coprime numerator/denominator with canonical sign.
    Rat reduced() const;

    Rat subst(Sym s, const Rat &value) const;
    Rat subst_mono(Sym s, const Mono &m, const Int &c = Int(1)) const;
    Rat rename(const std::map<Sym, Sym> &map) const;
    bool involves(Sym s) const { return num_.involves(s) || den_.involves(s); }
    std::vector<Sym> symbols() const;

    std::string str() const;

  private:
    void light_normalize();
    Poly num_, den_;
};

// Scalars live in the parameter field Q(q, qp, t1..tn); the type is shared
// with general rational functions, usage keeps the symbol sets apart.
using Scalar = Rat;

}  // namespace laumon
