#include <algorithm>
#include <climits>
#include <stdexcept>

#include "laumon/poly.hpp"

// Multivariate gcd over Z via primitive subresultant PRS, recursing on the
// coefficient ring.  Only reached from reduce()/printing paths, so clarity
// beats speed here.

namespace laumon {

namespace {

// Treat p as a univariate polynomial in x with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly &p, Sym x, int &lo_out) {
    int lo = p.low_deg(x), hi = p.deg(x);
    lo_out = lo;
    std::vector<Poly> cs(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) cs[k - lo] = p.coeff_of(x, k);
    return cs;
}

Poly from_coeffs(const std::vector<Poly> &cs, Sym x, int lo) {
    Poly r;
    for (size_t i = 0; i < cs.size(); ++i) r += cs[i].mul_mono(Mono::var(x, lo + (int)i));
    return r;
}

Poly content_in(const Poly &p, Sym x) {
    int lo;
    auto cs = coeffs_in(p, x, lo);
    Poly g;
    for (auto &c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in x (both with non-negative x-exponents).
Poly prem(const Poly &a, const Poly &b, Sym x) {
    int da = a.deg(x), db = b.deg(x);
    if (da < db) return a;
    Poly lb = b.lead_coeff(x);
    Poly r = a;
    int steps = da - db + 1;
    for (int i = 0; i < steps && !r.is_zero(); ++i) {
        int dr = r.deg(x);
        if (dr < db) {
            // pad remaining multiplications so degrees stay consistent
            r = r * lb.pow(steps - i);
            return r;
        }
        Poly lr = r.lead_coeff(x);
        r = r * lb - b.mul_mono(Mono::var(x, dr - db)) * lr;
    }
    return r;
}

Poly gcd_impl(Poly a, Poly b);

Poly gcd_univariate_step(Poly a, Poly b, Sym x) {
    // primitive PRS
    Poly ca = content_in(a, x), cb = content_in(b, x);
    Poly cg = gcd_impl(ca, cb);
    auto pa = a.divide_exact(ca);
    auto pb = b.divide_exact(cb);
    if (!pa || !pb) throw std::logic_error("gcd: content division failed");
    a = *pa;
    b = *pb;
    if (a.deg(x) < b.deg(x)) std::swap(a, b);
    while (!b.is_zero() && b.deg(x) > 0) {
        Poly r = prem(a, b, x);
        if (r.is_zero()) {
            a = b;
            b = Poly();
            break;
        }
        Poly cr = content_in(r, x);
        auto pr = r.divide_exact(cr);
        if (!pr) throw std::logic_error("gcd: primitive part failed");
        a = b;
        b = *pr;
        if (a.deg(x) < b.deg(x)) std::swap(a, b);
    }
    Poly prim;
    if (b.is_zero())
        prim = a;
    else
        prim = Poly(1L);  // nonzero x-free remainder: gcd has x-degree 0
    // make primitive in x one more time (paranoia after swaps)
    Poly cp = content_in(prim, x);
    auto pp = prim.divide_exact(cp);
    if (pp) prim = *pp;
    return cg * prim;
}

Poly gcd_impl(Poly a, Poly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    // strip monomial and integer content
    Mono ma = a.monomial_content(), mb = b.monomial_content();
    a = a.mul_mono(ma.inv());
    b = b.mul_mono(mb.inv());
    Int ca = a.content(), cb = b.content();
    a.divide_content(ca);
    b.divide_content(cb);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    // common monomial part: per-symbol min of matching-sign exponents
    Mono mg;
    {
        size_t i = 0, j = 0;
        while (i < ma.e.size() && j < mb.e.size()) {
            if (ma.e[i].first < mb.e[j].first)
                ++i;
            else if (ma.e[i].first > mb.e[j].first)
                ++j;
            else {
                int ka = ma.e[i].second, kb = mb.e[j].second;
                int k = 0;
                if (ka > 0 && kb > 0) k = std::min(ka, kb);
                if (ka < 0 && kb < 0) k = std::max(ka, kb);
                if (k != 0) mg.e.push_back({ma.e[i].first, k});
                ++i, ++j;
            }
        }
    }

    Poly g;
    if (a.is_constant() || b.is_constant()) {
        g = Poly(1L);
    } else if (a == b) {
        g = a;
    } else {
        // choose the variable of smallest combined degree as the main one
        std::vector<Sym> vars;
        for (Sym s : a.symbols())
            if (b.involves(s)) vars.push_back(s);
        if (vars.empty()) {
            g = Poly(1L);
        } else {
            Sym best = vars[0];
            long bestdeg = LONG_MAX;
            for (Sym s : vars) {
                long d = (long)a.deg(s) + b.deg(s);
                if (d < bestdeg) {
                    bestdeg = d;
                    best = s;
                }
            }
            g = gcd_univariate_step(a, b, best);
        }
    }
    Poly r = g.mul_mono(mg);
    r = r * Poly(cg);
    // canonical sign
    if (!r.is_zero() && r.terms().rbegin()->second < 0) r = -r;
    return r;
}

}  // namespace

Poly gcd(const Poly &a, const Poly &b) { return gcd_impl(a, b); }

}  // namespace laumon
