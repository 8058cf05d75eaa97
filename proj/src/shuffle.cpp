#include "laumon/shuffle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "laumon/modp.hpp"

namespace laumon {

// ---------------------------------------------------------------------------
// degree vectors and intervals

int DegreeVector::total() const { return std::accumulate(k.begin(), k.end(), 0); }

bool DegreeVector::operator<=(const DegreeVector &o) const {
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] > o.k[i]) return false;
    return true;
}

DegreeVector DegreeVector::operator+(const DegreeVector &o) const {
    DegreeVector r = *this;
    for (size_t i = 0; i < k.size(); ++i) r.k[i] += o.k[i];
    return r;
}

DegreeVector DegreeVector::operator-(const DegreeVector &o) const {
    DegreeVector r = *this;
    for (size_t i = 0; i < k.size(); ++i) r.k[i] -= o.k[i];
    return r;
}

DegreeVector DegreeVector::unit(int n, int i) {
    DegreeVector r = zero(n);
    r.k[reduce_weight(i, n) - 1] = 1;
    return r;
}

long pair_asym(const DegreeVector &a, const DegreeVector &b) {
    int n = a.n();
    long s = 0;
    for (int i = 1; i <= n; ++i) s += (long)a[i] * b[i] - (long)a[i] * b[i + 1];
    return s;
}

long pair_sym(const DegreeVector &a, const DegreeVector &b) {
    return pair_asym(a, b) + pair_asym(b, a);
}

int b_matrix(int n, int i, int j) {
    return (int)pair_asym(DegreeVector::unit(n, i), DegreeVector::unit(n, j));
}

int c_matrix(int n, int i, int j) {
    return (int)pair_sym(DegreeVector::unit(n, i), DegreeVector::unit(n, j));
}

int reduce_weight(int a, int n) {
    int r = a % n;
    if (r <= 0) r += n;
    return r;
}

DegreeVector Interval::degree_vector(int n) const {
    DegreeVector r = DegreeVector::zero(n);
    for (int x = i; x <= j; ++x) r.k[reduce_weight(x, n) - 1]++;
    return r;
}

int Interval::c_plus(int n) const {
    int c = 0;
    for (int x = i; x <= j; ++x)
        if (reduce_weight(x, n) == reduce_weight(j + 1, n)) ++c;
    return c;
}

int Interval::c_minus(int n) const {
    int c = 0;
    for (int x = i; x <= j; ++x)
        if (reduce_weight(x, n) == reduce_weight(i, n)) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// omega

OmegaParts omega_parts(const Poly &x, const Poly &y, int wx, int wy, int n) {
    Poly q = Poly::var(sym_q());
    Poly qi = Poly::var(sym_q(), -1);
    int a = reduce_weight(wx, n), b = reduce_weight(wy, n);
    if (a == b) return {x - y, qi * x - q * y};
    if (a == reduce_weight(wy + 1, n)) return {x - q * y, q * x - y};
    return {Poly(1L), Poly(1L)};
}

Rat omega(const Poly &x, const Poly &y, int wx, int wy, int n) {
    auto [num, den] = omega_parts(x, y, wx, wy, n);
    return Rat(num, den);
}

// ---------------------------------------------------------------------------
// ShuffleElement

ShuffleElement::ShuffleElement(int n, DegreeVector k, int d, Rat p)
    : n_(n), k_(std::move(k)), d_(d), p_(std::move(p)) {
    if (k_.n() != n_) throw std::invalid_argument("ShuffleElement: rank mismatch");
    for (Sym s : p_.den().symbols())
        if (!is_param_symbol(s, n_))
            throw std::invalid_argument("ShuffleElement: non-parameter denominator in p");
}

ShuffleElement ShuffleElement::unit(int n) {
    return ShuffleElement(n, DegreeVector::zero(n), 0, Rat(1));
}

std::vector<Sym> ShuffleElement::vars_of_weight(int w) const {
    std::vector<Sym> r;
    for (int j = 1; j <= k_[w]; ++j) r.push_back(sym_z(reduce_weight(w, n_), j));
    return r;
}

std::vector<Sym> ShuffleElement::all_vars() const {
    std::vector<Sym> r;
    for (int w = 1; w <= n_; ++w) {
        auto v = vars_of_weight(w);
        r.insert(r.end(), v.begin(), v.end());
    }
    return r;
}

namespace {

// Denominator factors prod_{i} prod_{j <= k_{i+1}, j' <= k_i} (q z_{i+1,j} - z_{i,j'}).
std::vector<Poly> cross_den_factors(int n, const DegreeVector &k) {
    std::vector<Poly> out;
    Poly q = Poly::var(sym_q());
    for (int i = 1; i <= n; ++i) {
        int up = reduce_weight(i + 1, n);
        for (int j = 1; j <= k[i + 1]; ++j)
            for (int j2 = 1; j2 <= k[i]; ++j2)
                out.push_back(q * Poly::var(sym_z(up, j)) - Poly::var(sym_z(reduce_weight(i, n), j2)));
    }
    return out;
}

// Same-weight pair data for the prefactor
struct PairList {
    std::vector<std::pair<Sym, Sym>> pairs;  // (z_{i,j}, z_{i,j'}) with j < j'
};

PairList same_weight_pairs(int n, const DegreeVector &k) {
    PairList pl;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k[i]; ++j)
            for (int j2 = j + 1; j2 <= k[i]; ++j2) pl.pairs.push_back({sym_z(i, j), sym_z(i, j2)});
    return pl;
}

}  // namespace

FR ShuffleElement::represented() const {
    // Pref * p / Den with
    //   Pref = prod_{i, j<j'} -(z_ij - z_ij')^2 / ((q^-1 z_ij - q z_ij')(q^-1 z_ij' - q z_ij))
    FR f(p_.num());
    if (!p_.den().is_one()) f.push_den(p_.den());
    Poly q = Poly::var(sym_q());
    Poly qi = Poly::var(sym_q(), -1);
    auto pl = same_weight_pairs(n_, k_);
    for (auto &[a, b] : pl.pairs) {
        Poly x = Poly::var(a), y = Poly::var(b);
        Poly diff = x - y;
        f.num = f.num * diff * diff;
        f.num = -f.num;
        f.push_den(qi * x - q * y);
        f.push_den(qi * y - q * x);
    }
    for (auto &g : cross_den_factors(n_, k_)) f.push_den(g);
    return f;
}

Rat ShuffleElement::represented_rat() const { return represented().to_rat(); }

std::optional<ShuffleElement> canonicalize(int n, const DegreeVector &k, const FR &f,
                                           bool throw_on_failure) {
    auto fail = [&](const std::string &msg) -> std::optional<ShuffleElement> {
        if (throw_on_failure) throw std::domain_error("canonicalize: " + msg);
        return std::nullopt;
    };
    if (f.is_zero()) return ShuffleElement(n, k, 0, Rat(0));

    // p = f * Den / Pref
    Poly num = f.num;
    std::vector<Poly> den = f.den;
    for (auto &g : cross_den_factors(n, k)) num = num * g;
    auto pl = same_weight_pairs(n, k);
    Poly q = Poly::var(sym_q());
    Poly qi = Poly::var(sym_q(), -1);
    for (auto &[a, b] : pl.pairs) {
        Poly x = Poly::var(a), y = Poly::var(b);
        num = num * (qi * x - q * y) * (qi * y - q * x);
        Poly diff = x - y;
        den.push_back(diff);
        den.push_back(diff);
        num = -num;
    }
    // divide out every z-involving denominator factor
    Poly pden(f.ic);
    for (auto &g : den) {
        bool has_z = false;
        for (Sym s : g.symbols())
            if (!is_param_symbol(s, n)) has_z = true;
        if (!has_z) {
            pden = pden * g;
            continue;
        }
        auto quo = num.divide_exact(g);
        if (!quo) return fail("factor does not divide numerator: " + g.str());
        num = *quo;
    }
    Rat p(num, pden);
    // degree bookkeeping: deg(represented) = deg(p) - deg(Den)
    std::vector<Sym> zs;
    for (int w = 1; w <= n; ++w)
        for (int j = 1; j <= k[w]; ++j) zs.push_back(sym_z(w, j));
    int dp = 0;
    if (!p.num().is_homogeneous(zs, &dp)) return fail("numerator not z-homogeneous");
    int dden = 0;
    for (int i = 1; i <= n; ++i) dden += k[i + 1] * k[i];
    return ShuffleElement(n, k, dp - dden, p);
}

// ---------------------------------------------------------------------------
// shuffle product

namespace {

// all ways to pick `a` slots out of {1..total}, order-preserving
void combinations(int total, int a, std::vector<std::vector<int>> &out) {
    std::vector<int> pick(a);
    std::function<void(int, int)> rec = [&](int start, int got) {
        if (got == a) {
            out.push_back(pick);
            return;
        }
        for (int s = start; s <= total - (a - got) + 1; ++s) {
            pick[got] = s;
            rec(s + 1, got + 1);
        }
    };
    rec(1, 0);
}

// Cross kernel K(x, y) for x a left-factor variable and y a right-factor
// variable; returns numerator factors and denominator factors.
void cross_kernel(int wx, int wy, Sym sx, Sym sy, int n, std::vector<Poly> &num,
                  std::vector<Poly> &den) {
    Poly q = Poly::var(sym_q());
    Poly qi = Poly::var(sym_q(), -1);
    Poly x = Poly::var(sx), y = Poly::var(sy);
    int a = reduce_weight(wx, n), b = reduce_weight(wy, n);
    if (a == b) {
        num.push_back(q * x - qi * y);
        den.push_back(x - y);
    } else if (a == reduce_weight(wy + 1, n)) {
        num.push_back(x - q * y);
    }
    if (b == reduce_weight(wx + 1, n) && a != b) num.push_back(q * y - x);
    if (a == b && n == 1) {
        // n = 1: the cross-weight denominators are same-weight pairs too
        num.push_back(q * x - y);
        num.push_back(q * y - x);
    }
}

}  // namespace

ShuffleElement shuffle_mul(const ShuffleElement &A, const ShuffleElement &B) {
    if (A.n() != B.n()) throw std::invalid_argument("shuffle_mul: rank mismatch");
    int n = A.n();
    if (A.is_zero() || B.is_zero()) return ShuffleElement::zero(n);
    DegreeVector k = A.k() + B.k();

    // per weight: choose which target slots carry A's variables
    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int i = 1; i <= n; ++i) {
        combinations(k[i], A.k()[i], choices[i - 1]);
        if (choices[i - 1].empty()) choices[i - 1].push_back({});
    }

    Rat scalar_den = Rat(Poly(1L), A.p().den() * B.p().den());
    FR total;
    std::vector<int> idx(n, 0);
    for (;;) {
        // build renamings for this coset representative
        std::map<Sym, Sym> renameA, renameB;
        std::vector<std::pair<int, Sym>> avars, bvars;  // (weight, target symbol)
        for (int i = 1; i <= n; ++i) {
            const auto &pick = choices[i - 1][idx[i - 1]];
            std::vector<bool> taken(k[i] + 1, false);
            for (int t = 0; t < (int)pick.size(); ++t) {
                renameA[sym_z(i, t + 1)] = sym_z(i, pick[t]);
                taken[pick[t]] = true;
                avars.push_back({i, sym_z(i, pick[t])});
            }
            int bslot = 0;
            for (int s = 1; s <= k[i]; ++s) {
                if (taken[s]) continue;
                ++bslot;
                renameB[sym_z(i, bslot)] = sym_z(i, s);
                bvars.push_back({i, sym_z(i, s)});
            }
        }
        FR term(A.p().num().rename(renameA) * B.p().num().rename(renameB));
        for (auto &[wa, sa] : avars)
            for (auto &[wb, sb] : bvars) {
                std::vector<Poly> kn, kd;
                cross_kernel(wa, wb, sa, sb, n, kn, kd);
                for (auto &g : kn) term.num = term.num * g;
                for (auto &g : kd) term.push_den(g);
            }
        total = fr_add(total, term);

        // next multi-index
        int pos = 0;
        while (pos < n) {
            if (++idx[pos] < (int)choices[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }

    // total = sum over cosets of p_A p_B prod K; the remaining denominators
    // (z_x - z_y) must cancel after symmetrization
    Poly num = total.num;
    Poly pden(total.ic);
    for (auto &g : total.den) {
        bool has_z = false;
        for (Sym s : g.symbols())
            if (!is_param_symbol(s, n)) has_z = true;
        if (!has_z) {
            pden = pden * g;
            continue;
        }
        auto quo = num.divide_exact(g);
        if (!quo)
            throw std::domain_error(
                "shuffle_mul: symmetrized numerator not divisible; input outside A+ (factor " +
                g.str() + ")");
        num = *quo;
    }
    Rat p = Rat(num, pden) * scalar_den;
    return ShuffleElement(n, k, A.d() + B.d(), p);
}

ShuffleElement shuffle_add(const ShuffleElement &A, const ShuffleElement &B) {
    if (!(A.k() == B.k())) throw std::invalid_argument("shuffle_add: bidegree mismatch");
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    if (A.d() != B.d()) throw std::invalid_argument("shuffle_add: degree mismatch");
    return ShuffleElement(A.n(), A.k(), A.d(), A.p() + B.p());
}

ShuffleElement shuffle_scale(const ShuffleElement &A, const Scalar &c) {
    if (c.is_zero()) return ShuffleElement::zero(A.n());
    return ShuffleElement(A.n(), A.k(), A.d(), A.p() * c);
}

// ---------------------------------------------------------------------------
// tau

ShuffleElement tau(const ShuffleElement &A) {
    int n = A.n();
    FR f = A.represented();
    for (Sym s : A.all_vars()) f = f.subst_mono_all(s, Mono::var(s, -1));
    // multiply prod_{i} prod_{j <= k_{i+1}} prod_{j' <= k_i} omega(z_{i+1,j}, z_{i,j'})
    for (int i = 1; i <= n; ++i) {
        int up = reduce_weight(i + 1, n);
        for (int j = 1; j <= A.k()[i + 1]; ++j)
            for (int j2 = 1; j2 <= A.k()[i]; ++j2) {
                if (n == 1 && j == j2) continue;  // same slot, omega vanishes identically
                auto parts = omega_parts(Poly::var(sym_z(up, j)), Poly::var(sym_z(reduce_weight(i, n), j2)),
                                         i + 1, i, n);
                f.num = f.num * parts.num;
                if (!parts.den.is_one()) f.push_den(parts.den);
            }
    }
    auto r = canonicalize(n, A.k(), f, true);
    return *r;
}

// ---------------------------------------------------------------------------
// wheel conditions

bool wheel_check(const ShuffleElement &A) {
    int n = A.n();
    const Poly &p = A.p().num();
    Sym w = sym_aux("_wheel", 0);
    Mono zq = Mono::var(w).mul(Mono::var(sym_q(), 1));
    Mono zqi = Mono::var(w).mul(Mono::var(sym_q(), -1));
    Mono z = Mono::var(w);
    for (int i = 1; i <= n; ++i) {
        for (int sgn : {+1, -1}) {
            int b = reduce_weight(i + sgn, n);
            Poly sub;
            if (b == i) {
                if (A.k()[i] < 3) continue;
                sub = p.subst_mono(sym_z(i, 1), zqi).subst_mono(sym_z(i, 2), zq).subst_mono(sym_z(i, 3), z);
            } else {
                if (A.k()[i] < 2 || A.k()[b] < 1) continue;
                sub = p.subst_mono(sym_z(i, 1), zqi).subst_mono(sym_z(i, 2), zq).subst_mono(sym_z(b, 1), z);
            }
            if (!sub.is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// words

ShuffleElement expand_word(int n, const GenWord &w) {
    ShuffleElement acc = ShuffleElement::unit(n);
    for (auto &[i, c] : w.letters) {
        int wi = reduce_weight(i, n);
        ShuffleElement letter(n, DegreeVector::unit(n, wi), c,
                              Rat(Poly::var(sym_z(wi, 1), c)));
        acc = shuffle_mul(acc, letter);
    }
    return acc;
}

ShuffleElement expand_word_direct(int n, const GenWord &w) {
    // Sym[ prod_a z_{i_a}^{c_a} prod_{a<b} omega(z_{i_a}, z_{i_b}) ], full
    // per-weight symmetrization.
    int kk = w.size();
    DegreeVector k = DegreeVector::zero(n);
    std::vector<Sym> letter_var(kk);
    std::vector<int> letter_wt(kk);
    for (int a = 0; a < kk; ++a) {
        int wi = reduce_weight(w.letters[a].first, n);
        k.k[wi - 1]++;
        letter_var[a] = sym_z(wi, k[wi]);
        letter_wt[a] = wi;
    }
    // base kernel
    FR base(Poly(1L));
    for (int a = 0; a < kk; ++a) base.mul_mono(Mono::var(letter_var[a], w.letters[a].second));
    for (int a = 0; a < kk; ++a)
        for (int b = a + 1; b < kk; ++b) {
            auto parts = omega_parts(Poly::var(letter_var[a]), Poly::var(letter_var[b]),
                                     letter_wt[a], letter_wt[b], n);
            base.num = base.num * parts.num;
            if (!parts.den.is_one()) base.push_den(parts.den);
        }
    // symmetrize over each weight class (full group)
    FR total;
    std::function<void(int, FR)> rec = [&](int wgt, FR cur) {
        if (wgt > n) {
            total = fr_add(total, cur);
            return;
        }
        int m = k[wgt];
        if (m <= 1) {
            rec(wgt + 1, cur);
            return;
        }
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::map<Sym, Sym> ren;
            for (int j = 1; j <= m; ++j) ren[sym_z(wgt, j)] = sym_z(wgt, perm[j - 1]);
            rec(wgt + 1, cur.rename(ren));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(1, base);
    auto r = canonicalize(n, k, total, true);
    return *r;
}

// ---------------------------------------------------------------------------
// X_m, P^d, Y_k

std::vector<Sym> interval_position_vars(int i, int j) {
    std::vector<Sym> r;
    for (int a = i; a <= j; ++a) r.push_back(sym_aux("zpos_", a));
    return r;
}

ShuffleElement build_X(int n, const Poly &m, int i, int j) {
    if (i > j) throw std::invalid_argument("build_X: empty interval");
    // assign positions a = i..j to per-weight slots in increasing order
    DegreeVector k = Interval{i, j}.degree_vector(n);
    std::map<int, int> next_slot;
    std::vector<Sym> pos_sym(j - i + 1);
    std::vector<int> pos_wt(j - i + 1);
    for (int a = i; a <= j; ++a) {
        int wgt = reduce_weight(a, n);
        pos_sym[a - i] = sym_z(wgt, ++next_slot[wgt]);
        pos_wt[a - i] = wgt;
    }
    std::map<Sym, Sym> posmap;
    {
        auto pv = interval_position_vars(i, j);
        for (int a = 0; a <= j - i; ++a) posmap[pv[a]] = pos_sym[a];
    }
    FR base(m.rename(posmap));
    Poly q = Poly::var(sym_q());
    for (int a = i; a < j; ++a) {
        // 1/(1 - q z_a / z_{a+1}) = z_{a+1}/(z_{a+1} - q z_a)
        base.num = base.num * Poly::var(pos_sym[a + 1 - i]);
        base.push_den(Poly::var(pos_sym[a + 1 - i]) - q * Poly::var(pos_sym[a - i]));
    }
    for (int a = i; a <= j; ++a)
        for (int b = a + 1; b <= j; ++b) {
            auto parts = omega_parts(Poly::var(pos_sym[b - i]), Poly::var(pos_sym[a - i]), b, a, n);
            base.num = base.num * parts.num;
            if (!parts.den.is_one()) base.push_den(parts.den);
        }
    // full per-weight symmetrization
    FR total;
    std::function<void(int, FR)> rec = [&](int wgt, FR cur) {
        if (wgt > n) {
            total = fr_add(total, cur);
            return;
        }
        int kw = k[wgt];
        if (kw <= 1) {
            rec(wgt + 1, cur);
            return;
        }
        std::vector<int> perm(kw);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::map<Sym, Sym> ren;
            for (int s = 1; s <= kw; ++s) ren[sym_z(wgt, s)] = sym_z(wgt, perm[s - 1]);
            rec(wgt + 1, cur.rename(ren));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(1, base);
    auto r = canonicalize(n, k, total, true);
    return *r;
}

std::vector<int> p_multiset(int i, int j, int d) {
    std::vector<int> s;
    int len = j - i + 1;
    for (int a = 0; a <= d; ++a) s.push_back(i + (int)((long)a * len / d) - (a == d ? 1 : 0));
    return s;
}

ShuffleElement build_P(int n, int i, int j, int d) {
    int len = j - i + 1;
    if (d > 0) {
        auto pv = interval_position_vars(i, j);
        Poly m(1L);
        for (int x : p_multiset(i, j, d)) m = m * Poly::var(pv[x - i]);
        m = m.mul_mono(Mono::var(pv[j - i], -1));
        return build_X(n, m, i, j);
    }
    if (d == 0) return build_X(n, Poly(1L), i, j);
    // d < 0: periodicity P^{d - L} = (z_i...z_j)^{-1} P^d
    int shift = (-d + len - 1) / len;
    ShuffleElement base = build_P(n, i, j, d + shift * len);
    // multiply p by (prod of all variables)^(-shift)
    Mono mm;
    for (Sym s : base.all_vars()) mm = mm.mul(Mono::var(s, -shift));
    Rat p(base.p().num().mul_mono(mm), base.p().den());
    return ShuffleElement(n, base.k(), base.d() - shift * len, p);
}

ShuffleElement build_Y(int n, const DegreeVector &k) {
    FR f(Poly(1L));
    std::vector<std::pair<int, Sym>> vars;
    for (int w = 1; w <= n; ++w)
        for (int j = 1; j <= k[w]; ++j) vars.push_back({w, sym_z(w, j)});
    for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = 0; b < vars.size(); ++b) {
            if (a == b) continue;
            auto parts = omega_parts(Poly::var(vars[a].second), Poly::var(vars[b].second),
                                     vars[a].first, vars[b].first, n);
            f.num = f.num * parts.num;
            if (!parts.den.is_one()) f.push_den(parts.den);
        }
    auto r = canonicalize(n, k, f, true);
    return *r;
}

// ---------------------------------------------------------------------------
// slope

bool slope_leq(const ShuffleElement &A, long mu_num, long mu_den) {
    if (A.is_zero()) return true;
    Rat f = A.represented_rat();
    int n = A.n();
    // enumerate sub-degree-vectors l <= k; scale the top k_i - l_i variables
    std::vector<int> l(n, 0);
    for (;;) {
        std::vector<Sym> scaled;
        for (int w = 1; w <= n; ++w)
            for (int j = l[w - 1] + 1; j <= A.k()[w]; ++j) scaled.push_back(sym_z(w, j));
        if (!scaled.empty()) {
            auto xl = xi_leading(f, scaled, mu_num, mu_den);
            if (!xl.finite) return false;
        }
        int pos = 0;
        while (pos < n) {
            if (++l[pos] <= A.k()[pos + 1]) break;
            l[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return true;
}

bool elements_equal(const ShuffleElement &A, const ShuffleElement &B, bool exact, int trials,
                    uint64_t seed) {
    if (A.n() != B.n()) return false;
    if (A.is_zero() && B.is_zero()) return true;
    if (!(A.k() == B.k())) return A.is_zero() && B.is_zero();
    if (!A.is_zero() && !B.is_zero() && A.d() != B.d()) return false;
    if (exact) return A.p() == B.p();
    return probe_equal(A.p(), B.p(), trials, seed);
}

}  // namespace laumon
