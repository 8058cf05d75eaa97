#include "laumon/extended.hpp"

#include <algorithm>
#include <stdexcept>

#include "laumon/modp.hpp"

namespace laumon {

PsiMono PsiMono::from_degree(const DegreeVector &k, int shift) {
    int n = k.n();
    PsiMono r = zero(n);
    for (int i = 1; i <= n; ++i) r.e[reduce_weight(i + shift, n) - 1] += k[i];
    return r;
}

PsiMono PsiMono::mul(const PsiMono &o) const {
    PsiMono r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

PsiMono PsiMono::inv() const {
    PsiMono r = *this;
    for (auto &x : r.e) x = -x;
    return r;
}

bool PsiMono::is_one() const {
    for (int x : e)
        if (x) return false;
    return true;
}

PhiMono PhiMono::mul(const PhiMono &o) const {
    PhiMono r = *this;
    r.modes.insert(r.modes.end(), o.modes.begin(), o.modes.end());
    std::sort(r.modes.begin(), r.modes.end());
    return r;
}

int PhiMono::total_mode() const {
    int s = 0;
    for (auto &[i, k] : modes) s += k;
    return s;
}

// ---------------------------------------------------------------------------
// ExtendedElement

ExtendedElement ExtendedElement::from_shuffle(const ShuffleElement &s) {
    ExtendedElement e(s.n());
    if (!s.is_zero()) e.add_term({Rat(1), PsiMono::zero(s.n()), PhiMono::one(), s});
    return e;
}

ExtendedElement ExtendedElement::psi_power(int n, const PsiMono &m) {
    ExtendedElement e(n);
    e.add_term({Rat(1), m, PhiMono::one(), ShuffleElement::unit(n)});
    return e;
}

void ExtendedElement::add_term(ExtTerm t) {
    if (t.c.is_zero() || t.sh.is_zero()) return;
    // fold the scalar into c, keep sh's own p as is
    for (auto &u : terms_) {
        if (u.psi == t.psi && u.phi == t.phi && u.sh.k() == t.sh.k() && u.sh.d() == t.sh.d()) {
            // combine: c_u * p_u + c_t * p_t
            Rat p = u.sh.p() * u.c + t.sh.p() * t.c;
            if (p.is_zero()) {
                u.c = Rat(0);
                u.sh = ShuffleElement::zero(n_);
            } else {
                u.sh = ShuffleElement(n_, u.sh.k(), u.sh.d(), p);
                u.c = Rat(1);
            }
            terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                        [](const ExtTerm &x) { return x.c.is_zero() || x.sh.is_zero(); }),
                         terms_.end());
            return;
        }
    }
    terms_.push_back(std::move(t));
}

ExtendedElement ExtendedElement::operator+(const ExtendedElement &o) const {
    ExtendedElement r = *this;
    for (auto &t : o.terms_) r.add_term(t);
    return r;
}

ExtendedElement ExtendedElement::operator-() const {
    ExtendedElement r = *this;
    for (auto &t : r.terms_) t.c = -t.c;
    return r;
}

ExtendedElement ExtendedElement::scale(const Scalar &c) const {
    if (c.is_zero()) return ExtendedElement(n_);
    ExtendedElement r = *this;
    for (auto &t : r.terms_) t.c = t.c * c;
    return r;
}

std::vector<std::pair<int, ShuffleElement>> move_phi_left(const ShuffleElement &P, int i, int k) {
    // correction C(z) = prod_{vars z'} omega(z', z)/omega(z, z'), z of weight i,
    // expanded in powers of 1/z; returns [(m, P * C_m)] for 0 <= m <= k.
    int n = P.n();
    std::vector<std::pair<int, ShuffleElement>> out;
    if (P.is_unit_degree() || P.is_zero()) {
        out.push_back({k, P});
        return out;
    }
    Sym zeta = sym_aux("_zeta", 0);  // zeta = 1/z
    FR corr(Poly(1L));
    for (int w = 1; w <= n; ++w) {
        for (Sym zv : P.vars_of_weight(w)) {
            // omega(z', z)/omega(z, z') with z = 1/zeta
            Poly zp = Poly::var(zv);
            Poly zinv = Poly::var(zeta, 1);  // stands for z^{-1}; we clear later
            // Work with z as a monomial 1/zeta: build parts with x = z', y = z
            // omega(z', z): arguments (z', 1/zeta)
            auto top = omega_parts(zp, Poly::var(zeta, -1), w, i, n);
            auto bot = omega_parts(Poly::var(zeta, -1), zp, i, w, n);
            corr.num = corr.num * top.num * bot.den;
            if (!top.den.is_one()) corr.push_den(top.den);
            if (!bot.num.is_one()) corr.push_den(bot.num);
            (void)zinv;
        }
    }
    // expand in zeta around 0 up to order k
    for (int m = 0; m <= k; ++m) {
        FR cm = region_coeff(corr, zeta, m);
        Rat cr = cm.to_rat();
        if (cr.is_zero()) continue;
        // P . C_m : multiply the canonical numerator by C_m (a polynomial in
        // P's variables over the parameter field)
        Rat p2 = P.p() * cr;
        for (Sym s : p2.den().symbols())
            if (!is_param_symbol(s, n))
                throw std::logic_error("move_phi_left: correction not polynomial");
        out.push_back({k - m, ShuffleElement(n, P.k(), P.d() + m, p2)});
    }
    return out;
}

ExtendedElement ExtendedElement::operator*(const ExtendedElement &o) const {
    if (n_ != o.n_) throw std::invalid_argument("ExtendedElement: rank mismatch");
    ExtendedElement r(n_);
    for (auto &a : terms_) {
        for (auto &b : o.terms_) {
            // a = c_a psi_a phi_a X ; b = c_b psi_b phi_b Y
            // X * psi_b = q^{-<k_X, beta>} psi_b * X
            long e = 0;
            for (int i = 1; i <= n_; ++i)
                e -= (long)b.psi.e[i - 1] * pair_asym(a.sh.k(), DegreeVector::unit(n_, i));
            Scalar c = a.c * b.c * Rat(Poly(Mono::var(sym_q(), (int)e), Int(1)));
            // move b's phi modes left through a.sh, tracking the psi part
            // picked up by 0-modes (phi_{i,0} = psi_i/psi_{i+1})
            std::vector<std::tuple<PsiMono, PhiMono, ShuffleElement, Scalar>> acc = {
                {PsiMono::zero(n_), PhiMono::one(), a.sh, c}};
            for (auto &[pw, pk] : b.phi.modes) {
                std::vector<std::tuple<PsiMono, PhiMono, ShuffleElement, Scalar>> next;
                for (auto &[ps, phm, X, cc] : acc) {
                    for (auto &[mleft, Xc] : move_phi_left(X, pw, pk)) {
                        PsiMono ps2 = ps;
                        PhiMono ph2 = phm;
                        if (mleft > 0) {
                            ph2 = ph2.mul(PhiMono{{{pw, mleft}}});
                        } else {
                            int wi = reduce_weight(pw, n_), wi1 = reduce_weight(pw + 1, n_);
                            ps2.e[wi - 1] += 1;
                            ps2.e[wi1 - 1] -= 1;
                        }
                        next.push_back({ps2, ph2, Xc, cc});
                    }
                }
                acc = std::move(next);
            }
            for (auto &[ps, phm, X, cc] : acc) {
                ExtTerm t;
                t.c = cc;
                t.psi = a.psi.mul(b.psi).mul(ps);
                t.phi = a.phi.mul(phm);
                t.sh = shuffle_mul(X, b.sh);
                r.add_term(std::move(t));
            }
        }
    }
    return r;
}

bool extended_equal(const ExtendedElement &a, const ExtendedElement &b, int trials,
                    uint64_t seed) {
    // bucket by (psi, phi, k); compare summed (c * represented) rational
    // functions per bucket
    using Key = std::tuple<std::vector<int>, std::vector<std::pair<int, int>>, std::vector<int>>;
    std::map<Key, Rat> diff;
    auto feed = [&](const ExtendedElement &e, int sign) {
        for (auto &t : e.terms()) {
            Key k{t.psi.e, t.phi.modes, t.sh.k().k};
            Rat v = t.c * t.sh.represented_rat();
            if (sign < 0) v = -v;
            auto it = diff.find(k);
            if (it == diff.end())
                diff.emplace(k, v);
            else
                it->second = it->second + v;
        }
    };
    feed(a, +1);
    feed(b, -1);
    for (auto &[k, v] : diff)
        if (!v.is_zero() && !probe_equal(v, Rat(0), trials, seed)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// TensorElement

void TensorElement::add_term(TensorTerm t) {
    if (t.c.is_zero() || t.left.sh.is_zero() || t.right.sh.is_zero()) return;
    t.c = t.c * t.left.c * t.right.c;
    t.left.c = Rat(1);
    t.right.c = Rat(1);
    terms_.push_back(std::move(t));
}

TensorElement TensorElement::operator+(const TensorElement &o) const {
    TensorElement r = *this;
    for (auto &t : o.terms_) r.add_term(t);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement &o) const {
    TensorElement r(n_);
    for (auto &a : terms_)
        for (auto &b : o.terms_) {
            ExtendedElement la(n_), lb(n_), ra(n_), rb(n_);
            la.add_term(a.left);
            lb.add_term(b.left);
            ra.add_term(a.right);
            rb.add_term(b.right);
            ExtendedElement l = la * lb, rr = ra * rb;
            for (auto &lt : l.terms())
                for (auto &rt : rr.terms()) {
                    TensorTerm t;
                    t.c = a.c * b.c * lt.c * rt.c;
                    t.left = lt;
                    t.left.c = Rat(1);
                    t.right = rt;
                    t.right.c = Rat(1);
                    r.add_term(std::move(t));
                }
        }
    return r;
}

bool tensor_equal(const TensorElement &a, const TensorElement &b, int trials, uint64_t seed) {
    // bucket by (psi_l, phi_l, k_l, psi_r, phi_r, k_r); the shuffle parts of
    // left/right factors are joined over disjoint variable sets
    using Key = std::tuple<std::vector<int>, std::vector<std::pair<int, int>>, std::vector<int>,
                           std::vector<int>, std::vector<std::pair<int, int>>, std::vector<int>>;
    std::map<Key, Rat> diff;
    auto feed = [&](const TensorElement &e, int sign) {
        for (auto &t : e.terms()) {
            Key k{t.left.psi.e, t.left.phi.modes, t.left.sh.k().k,
                  t.right.psi.e, t.right.phi.modes, t.right.sh.k().k};
            Rat l = t.left.sh.represented_rat();
            // move right factor onto fresh symbols
            std::map<Sym, Sym> ren;
            for (int w = 1; w <= e.n(); ++w)
                for (int j = 1; j <= t.right.sh.k()[w]; ++j)
                    ren[sym_z(w, j)] = sym_aux("_w" + std::to_string(w) + "_", j);
            Rat rr = t.right.sh.represented_rat().rename(ren);
            Rat v = t.c * l * rr;
            if (sign < 0) v = -v;
            auto it = diff.find(k);
            if (it == diff.end())
                diff.emplace(k, v);
            else
                it->second = it->second + v;
        }
    };
    feed(a, +1);
    feed(b, -1);
    for (auto &[k, v] : diff)
        if (!v.is_zero() && !probe_equal(v, Rat(0), trials, seed)) return false;
    return true;
}

}  // namespace laumon
