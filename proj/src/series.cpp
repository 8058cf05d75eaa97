#include "laumon/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace laumon {

// ---------------------------------------------------------------------------
// FR basics

FR FR::from_rat(const Rat &r) {
    FR f(r.num());
    if (!r.den().is_one()) f.push_den(r.den());
    return f;
}

Rat FR::to_rat() const {
    Poly d(ic);
    for (auto &g : den) d = d * g;
    return Rat(num, d);
}

void FR::push_den(const Poly &f) {
    if (f.is_zero()) throw std::domain_error("FR: zero denominator factor");
    Poly g = f;
    Mono mc = g.monomial_content();
    if (!mc.is_one()) {
        g = g.mul_mono(mc.inv());
        num = num.mul_mono(mc.inv());
    }
    Int c = g.content();
    if (g.terms().rbegin()->second < 0) {
        g = -g;
        num = -num;
    }
    if (c > 1) {
        g.divide_content(c);
        ic *= c;
    }
    if (g.is_one()) return;
    den.push_back(g);
}

FR FR::mul(const FR &o) const {
    FR r;
    r.num = num * o.num;
    r.den = den;
    r.den.insert(r.den.end(), o.den.begin(), o.den.end());
    r.ic = ic * o.ic;
    return r;
}

FR FR::mul_rat(const Rat &r) const {
    FR f = *this;
    f.num = f.num * r.num();
    if (!r.den().is_one()) f.push_den(r.den());
    return f;
}

FR FR::subst_mono_all(Sym s, const Mono &m) const {
    FR r;
    r.ic = ic;
    r.num = num.subst_mono(s, m);
    for (auto &g : den) {
        Poly gg = g.subst_mono(s, m);
        // re-normalize through push_den to keep factors content-free
        r.push_den(gg);
    }
    return r;
}

FR FR::rename(const std::map<Sym, Sym> &map) const {
    FR r;
    r.ic = ic;
    r.num = num.rename(map);
    for (auto &g : den) r.push_den(g.rename(map));
    return r;
}

bool poly_less(const Poly &a, const Poly &b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first < ib->first) return true;
        if (ib->first < ia->first) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == ea && ib != eb;
}

FR fr_add(const FR &f, const FR &g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto sorted = [](std::vector<Poly> v) {
        std::sort(v.begin(), v.end(), poly_less);
        return v;
    };
    std::vector<Poly> fa = sorted(f.den), gb = sorted(g.den);
    // multiset-max union; record what each side is missing
    std::vector<Poly> uni, extra_f, extra_g;
    size_t i = 0, j = 0;
    while (i < fa.size() || j < gb.size()) {
        if (j == gb.size() || (i < fa.size() && poly_less(fa[i], gb[j]))) {
            uni.push_back(fa[i]);
            extra_g.push_back(fa[i]);
            ++i;
        } else if (i == fa.size() || poly_less(gb[j], fa[i])) {
            uni.push_back(gb[j]);
            extra_f.push_back(gb[j]);
            ++j;
        } else {
            uni.push_back(fa[i]);
            ++i, ++j;
        }
    }
    Int l;
    mpz_lcm(l.get_mpz_t(), f.ic.get_mpz_t(), g.ic.get_mpz_t());
    Poly nf = f.num * Poly(l / f.ic);
    for (auto &p : extra_f) nf = nf * p;
    Poly ng = g.num * Poly(l / g.ic);
    for (auto &p : extra_g) ng = ng * p;
    FR r;
    r.num = nf + ng;
    r.den = uni;
    r.ic = l;
    if (r.num.is_zero()) {
        r.den.clear();
        r.ic = 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Region expansion

FR region_coeff(const FR &f, Sym v, int target) {
    if (f.is_zero()) return FR();
    FR work = f;  // we will pull monomial contents out of den factors
    std::vector<Poly> keep;           // v-free factors
    std::vector<std::pair<Poly, Poly>> split;  // (B = v-free part, A = v-positive part)
    Poly num = work.num;
    for (auto &g0 : work.den) {
        Poly g = g0;
        Mono mc = g.monomial_content();
        if (!mc.is_one()) {
            g = g.mul_mono(mc.inv());
            num = num.mul_mono(mc.inv());
        }
        if (!g.involves(v)) {
            keep.push_back(g);
            continue;
        }
        Poly B, A;
        int lo = g.low_deg(v);
        if (lo != 0)
            throw std::domain_error("region_coeff: internal: factor not normalized: " + g.str());
        for (auto &[m, c] : g.terms()) {
            if (m.exp(v) == 0)
                B.add_term(m, c);
            else
                A.add_term(m, c);
        }
        if (B.is_zero())
            throw std::domain_error("region_coeff: factor with no leading part in " +
                                    sym_name(v) + ": " + g.str());
        split.push_back({B, A});
    }

    int numlo = num.low_deg(v);
    if (numlo > target) return FR();
    int budget = target - numlo;

    FR result;
    // Recursive enumeration of expansion orders m_j for each split factor:
    //   1/(B+A) = sum_m (-1)^m A^m / B^(m+1)
    std::vector<int> orders(split.size(), 0);
    std::function<void(size_t, const Poly &, int)> rec = [&](size_t j, const Poly &prod,
                                                             int left) {
        if (j == split.size()) {
            Poly c = prod.coeff_of(v, target);
            if (c.is_zero()) return;
            FR term(c);
            term.ic = work.ic;
            term.den = keep;
            for (size_t t = 0; t < split.size(); ++t)
                for (int r = 0; r <= orders[t]; ++r) term.push_den(split[t].first);
            result = fr_add(result, term);
            return;
        }
        const Poly &A = split[j].second;
        int alo = A.low_deg(v);  // >= 1
        Poly apow(1L);
        for (int m = 0;; ++m) {
            if (m > 0) apow = apow * A;
            int spent = m * alo;
            if (spent > left) break;
            orders[j] = m;
            Poly p = prod * apow;
            if (m % 2 == 1) p = -p;
            rec(j + 1, p, left - spent);
        }
    };
    rec(0, num, budget);
    return result;
}

FR ordered_residue(FR f, const std::vector<Sym> &order, Measure m) {
    int target = (m == Measure::DuOverU) ? 0 : -1;
    for (Sym v : order) f = region_coeff(f, v, target);
    return f;
}

// ---------------------------------------------------------------------------
// Residues and limits at a point, via v = val*(1+s) truncated series

namespace {

struct SeriesRat {
    // coefficients c[k] of s^k, k = 0..ord
    std::vector<Rat> c;

    static SeriesRat zero(int ord) {
        SeriesRat r;
        r.c.assign(ord + 1, Rat(0));
        return r;
    }
};

// binomial(k, m) for integer k (possibly negative), m >= 0
Int binom(long k, int m) {
    Int num(1), den(1);
    for (int i = 0; i < m; ++i) {
        num *= Int(k - i);
        den *= Int(i + 1);
    }
    return num / den;
}

SeriesRat expand_poly(const Poly &p, Sym v, const Rat &val, int ord) {
    SeriesRat r = SeriesRat::zero(ord);
    for (auto &[mo, co] : p.terms()) {
        int k = mo.exp(v);
        Mono rest = mo.mul(Mono::var(v, -k));
        Rat base = Rat(Poly(rest, co)) * val.pow(k);
        for (int m = 0; m <= ord; ++m) {
            Int b = binom(k, m);
            if (b == 0) continue;
            r.c[m] += base * Rat(Poly(b));
        }
    }
    return r;
}

SeriesRat mul_series(const SeriesRat &a, const SeriesRat &b, int ord) {
    SeriesRat r = SeriesRat::zero(ord);
    for (int i = 0; i <= ord; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

// inverse of a series with c[0] != 0
SeriesRat inv_series(const SeriesRat &a, int ord) {
    SeriesRat r = SeriesRat::zero(ord);
    Rat i0 = a.c[0].inv();
    r.c[0] = i0;
    for (int k = 1; k <= ord; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += a.c[j] * r.c[k - j];
        r.c[k] = -(i0 * acc);
    }
    return r;
}

int valuation(const SeriesRat &a) {
    for (int k = 0; k < (int)a.c.size(); ++k)
        if (!a.c[k].is_zero()) return k;
    return (int)a.c.size();
}

// f as a Laurent series in s around 0: returns (valuation nu, unit series u)
// with f = s^nu * u, computed to s^ord of the unit part.
std::pair<int, SeriesRat> laurent_series(const FR &f, Sym v, const Rat &val) {
    // order bound: each factor's valuation is at most its v-degree span
    int span = f.num.deg(v) - f.num.low_deg(v);
    for (auto &g : f.den) span += g.deg(v) - g.low_deg(v);
    int ord = span + 2;
    int work_ord = ord + span + 2;

    SeriesRat n = expand_poly(f.num, v, val, work_ord);
    int nu_n = valuation(n);
    if (nu_n > work_ord) return {work_ord + 1, SeriesRat::zero(ord)};  // zero to this depth
    int nu = nu_n;
    // shift numerator down
    SeriesRat unit = SeriesRat::zero(work_ord);
    for (int k = 0; k + nu_n <= work_ord; ++k) unit.c[k] = n.c[k + nu_n];
    for (auto &g : f.den) {
        SeriesRat d = expand_poly(g, v, val, work_ord);
        int nu_d = valuation(d);
        if (nu_d > work_ord) throw std::logic_error("laurent_series: denominator vanished");
        SeriesRat ds = SeriesRat::zero(work_ord);
        for (int k = 0; k + nu_d <= work_ord; ++k) ds.c[k] = d.c[k + nu_d];
        unit = mul_series(unit, inv_series(ds, work_ord), work_ord);
        nu -= nu_d;
    }
    if (f.ic != 1) {
        Rat icr = Rat(Poly(1L), Poly(f.ic));
        for (auto &cc : unit.c) cc = cc * icr;
    }
    unit.c.resize(ord + 1, Rat(0));
    return {nu, unit};
}

}  // namespace

Rat residue_at(const FR &f, Sym v, const Rat &val) {
    if (f.is_zero()) return Rat(0);
    auto [nu, unit] = laurent_series(f, v, val);
    // residue of f dv at v = val: coefficient of s^{-1}, times val
    int want = -1 - nu;  // index into unit coefficients
    if (want < 0 || want >= (int)unit.c.size()) return Rat(0);
    return unit.c[want] * val;
}

std::optional<Rat> limit_at(const FR &f, Sym v, const Rat &val) {
    if (f.is_zero()) return Rat(0);
    auto [nu, unit] = laurent_series(f, v, val);
    if (nu < 0) return std::nullopt;
    if (nu > 0) return Rat(0);
    return unit.c[0];
}

XiLeading xi_leading(const Rat &f, const std::vector<Sym> &scaled, long mu_num, long mu_den) {
    if (mu_den <= 0) throw std::invalid_argument("xi_leading: mu_den must be positive");
    XiLeading out;
    if (f.is_zero()) {
        out.finite = true;
        out.leading = Rat(0);
        return out;
    }
    Sym xi = sym_aux("_xi", 0);
    Poly n = f.num().scale_vars(scaled, xi);
    Poly d = f.den().scale_vars(scaled, xi);
    long deg = (long)n.deg(xi) - (long)d.deg(xi);
    long bound_num = mu_num * (long)scaled.size();
    // compare deg with bound_num/mu_den
    long lhs = deg * mu_den;
    if (lhs > bound_num) {
        out.finite = false;
        return out;
    }
    out.finite = true;
    if (lhs < bound_num) {
        out.leading = Rat(0);
        return out;
    }
    Poly ln = n.lead_coeff(xi);
    Poly ld = d.lead_coeff(xi);
    out.leading = Rat(ln, ld);
    return out;
}

}  // namespace laumon
