#pragma once

#include <optional>
#include <vector>

#include "laumon/poly.hpp"

namespace laumon {

// Rational function with an explicitly factored denominator.  All contour
// and region manipulations keep the factor list, since expansions are
// decided factor by factor.
struct FR {
    Poly num;
    std::vector<Poly> den;  // non-constant factors; repetition = multiplicity
    Int ic{1};              // positive integer denominator

    FR() : num(0L) {}
    explicit FR(const Poly &n) : num(n) {}
    static FR one() { return FR(Poly(1L)); }
    static FR from_rat(const Rat &r);

    bool is_zero() const { return num.is_zero(); }
    Rat to_rat() const;

    void push_den(const Poly &f);          // multiply by 1/f
    void mul_poly(const Poly &f) { num = num * f; }
    void mul_mono(const Mono &m) { num = num.mul_mono(m); }
    FR mul(const FR &o) const;
    FR mul_rat(const Rat &r) const;
    FR subst_mono_all(Sym s, const Mono &m) const;
    FR rename(const std::map<Sym, Sym> &map) const;
};

// Strict total order on polynomials (for canonical factor multisets).
bool poly_less(const Poly &a, const Poly &b);

// f + g with multiset-max common denominators.
FR fr_add(const FR &f, const FR &g);

// Coefficient of v^target when f is expanded as a Laurent series in the
// region where v is infinitesimally smaller than every other quantity.
// Denominator factors whose v-support cannot be split off a v-free part
// raise std::domain_error naming the factor.
FR region_coeff(const FR &f, Sym v, int target);

enum class Measure {
    DuOverU,  // du/(2 pi i u): constant-term extraction
    Du,       // du/(2 pi i): residue at the origin-side expansion
};

// Iterated contour extraction over |u_1| << ... << |u_k| (first variable
// innermost/smallest), one measure for all variables.
FR ordered_residue(FR f, const std::vector<Sym> &order_innermost_first, Measure m);

// Residue of f dv at v = val (val nonzero, v-free); exact, any pole order.
Rat residue_at(const FR &f, Sym v, const Rat &val);

// Limit of f as v -> val with zero/pole cancellation; nullopt on a pole.
std::optional<Rat> limit_at(const FR &f, Sym v, const Rat &val);

struct XiLeading {
    bool finite = false;
    Rat leading;  // coefficient of the extremal power, 0 if degree < bound
};

// Behaviour of f(z -> xi*z for z in scaled) as xi -> infinity, measured
// against xi^(mu_num/mu_den * |scaled|).
XiLeading xi_leading(const Rat &f, const std::vector<Sym> &scaled, long mu_num, long mu_den);

}  // namespace laumon
