#include "laumon/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace laumon {

// ---------------------------------------------------------------------------
// Mono

Mono Mono::var(Sym s, int k) {
    Mono m;
    if (k != 0) m.e.push_back({s, k});
    return m;
}

int Mono::exp(Sym s) const {
    for (auto &[sym, k] : e)
        if (sym == s) return k;
    return 0;
}

Mono Mono::mul(const Mono &o) const {
    Mono r;
    r.e.reserve(e.size() + o.e.size());
    size_t i = 0, j = 0;
    while (i < e.size() && j < o.e.size()) {
        if (e[i].first < o.e[j].first)
            r.e.push_back(e[i++]);
        else if (e[i].first > o.e[j].first)
            r.e.push_back(o.e[j++]);
        else {
            int k = e[i].second + o.e[j].second;
            if (k != 0) r.e.push_back({e[i].first, k});
            ++i, ++j;
        }
    }
    while (i < e.size()) r.e.push_back(e[i++]);
    while (j < o.e.size()) r.e.push_back(o.e[j++]);
    return r;
}

Mono Mono::inv() const {
    Mono r = *this;
    for (auto &[s, k] : r.e) k = -k;
    return r;
}

Mono Mono::pow(int k) const {
    if (k == 0) return {};
    Mono r = *this;
    for (auto &[s, kk] : r.e) kk *= k;
    return r;
}

int Mono::total_degree() const {
    int d = 0;
    for (auto &[s, k] : e) d += k;
    return d;
}

int Mono::degree_in(const std::vector<Sym> &vars) const {
    int d = 0;
    for (auto &[s, k] : e)
        if (std::find(vars.begin(), vars.end(), s) != vars.end()) d += k;
    return d;
}

// Dense lexicographic order (priority to smaller symbol ids, missing = 0).
// Translation-invariant over Z^k, so leading-term division is sound even for
// Laurent exponents.
bool Mono::operator<(const Mono &o) const {
    size_t i = 0, j = 0;
    while (i < e.size() || j < o.e.size()) {
        Sym sa = i < e.size() ? e[i].first : INT32_MAX;
        Sym sb = j < o.e.size() ? o.e[j].first : INT32_MAX;
        Sym s = std::min(sa, sb);
        int ka = (sa == s) ? e[i].second : 0;
        int kb = (sb == s) ? o.e[j].second : 0;
        if (ka != kb) return ka < kb;
        if (sa == s) ++i;
        if (sb == s) ++j;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Mono::one(), Int(c));
}

Poly::Poly(const Int &c) {
    if (c != 0) terms_.emplace(Mono::one(), c);
}

Poly::Poly(const Mono &m, const Int &c) {
    if (c != 0) terms_.emplace(m, c);
}

Poly Poly::var(Sym s, int k) { return Poly(Mono::var(s, k), Int(1)); }

Poly Poly::monomial(Sym s, int k, const Int &c) { return Poly(Mono::var(s, k), c); }

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto &[m, c] : r.terms_) c = -c;
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    for (auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    for (auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly &o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    Poly r;
    for (auto &[m1, c1] : terms_)
        for (auto &[m2, c2] : o.terms_) r.add_term(m1.mul(m2), c1 * c2);
    return r;
}

Poly Poly::mul_mono(const Mono &m, const Int &c) const {
    Poly r;
    if (c == 0) return r;
    for (auto &[m1, c1] : terms_) r.terms_.emplace(m1.mul(m), c1 * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow negative");
    Poly r(1L);
    Poly b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

void Poly::add_term(const Mono &m, const Int &c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Poly::content() const {
    Int g(0);
    for (auto &[m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Mono Poly::monomial_content() const {
    if (terms_.empty()) return {};
    std::map<Sym, int> lo;  // min exponent over all terms, for every symbol occurring anywhere
    bool first = true;
    for (auto &[m, c] : terms_) {
        if (first) {
            for (auto &[s, k] : m.e) lo[s] = k;
            first = false;
            continue;
        }
        // symbols missing from this term have exponent 0
        for (auto &[s, k] : lo) k = std::min(k, m.exp(s));
        for (auto &[s, k] : m.e)
            if (!lo.count(s)) lo[s] = std::min(0, k);
    }
    Mono r;
    for (auto &[s, k] : lo)
        if (k != 0) r.e.push_back({s, k});
    return r;
}

void Poly::divide_content(const Int &c) {
    if (c == 0 || c == 1) return;
    for (auto &[m, co] : terms_) co /= c;
}

std::vector<Sym> Poly::symbols() const {
    std::set<Sym> s;
    for (auto &[m, c] : terms_)
        for (auto &[sym, k] : m.e) s.insert(sym);
    return std::vector<Sym>(s.begin(), s.end());
}

bool Poly::involves(Sym s) const {
    for (auto &[m, c] : terms_)
        if (m.exp(s) != 0) return true;
    return false;
}

int Poly::deg(Sym s) const {
    if (terms_.empty()) return 0;
    int d = INT32_MIN;
    for (auto &[m, c] : terms_) d = std::max(d, m.exp(s));
    return d;
}

int Poly::low_deg(Sym s) const {
    if (terms_.empty()) return 0;
    int d = INT32_MAX;
    for (auto &[m, c] : terms_) d = std::min(d, m.exp(s));
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return 0;
    int d = INT32_MIN;
    for (auto &[m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool Poly::is_homogeneous(const std::vector<Sym> &vars, int *deg_out) const {
    bool first = true;
    int d = 0;
    for (auto &[m, c] : terms_) {
        int dm = m.degree_in(vars);
        if (first) {
            d = dm;
            first = false;
        } else if (dm != d) {
            return false;
        }
    }
    if (deg_out) *deg_out = d;
    return true;
}

Poly Poly::coeff_of(Sym s, int k) const {
    Poly r;
    for (auto &[m, c] : terms_) {
        if (m.exp(s) != k) continue;
        r.terms_.emplace(m.mul(Mono::var(s, -k)), c);
    }
    return r;
}

Poly Poly::lead_coeff(Sym s) const { return coeff_of(s, deg(s)); }

Poly Poly::subst(Sym s, const Poly &value) const {
    if (!involves(s)) return *this;
    int lo = low_deg(s);
    if (lo < 0 && !value.is_monomial())
        throw std::invalid_argument("subst: negative exponent needs monomial value");
    Poly r;
    for (auto &[m, c] : terms_) {
        int k = m.exp(s);
        Mono m2 = m.mul(Mono::var(s, -k));
        if (k == 0) {
            r.add_term(m2, c);
            continue;
        }
        Poly vp;
        if (k > 0) {
            vp = value.pow(k);
        } else {
            const auto &[vm, vc] = *value.terms().begin();
            if (mpz_cmpabs_ui(vc.get_mpz_t(), 1) != 0)
                throw std::invalid_argument("subst: negative power of non-unit coefficient");
            Int cc = (k % 2 == 0 || vc > 0) ? Int(1) : Int(-1);
            vp = Poly(vm.pow(k), cc);
        }
        r += vp.mul_mono(m2, c);
    }
    return r;
}

Poly Poly::subst_mono(Sym s, const Mono &m, const Int &c) const {
    Poly r;
    for (auto &[mm, co] : terms_) {
        int k = mm.exp(s);
        Mono base = mm.mul(Mono::var(s, -k)).mul(m.pow(k));
        Int coef = co;
        if (k != 0 && c != 1) {
            if (c == -1) {
                if (k % 2 != 0) coef = -coef;
            } else if (k > 0) {
                Int cp;
                mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), (unsigned long)k);
                coef *= cp;
            } else {
                throw std::invalid_argument("subst_mono: negative power of non-unit coefficient");
            }
        }
        r.add_term(base, coef);
    }
    return r;
}

Poly Poly::rename(const std::map<Sym, Sym> &map) const {
    Poly r;
    for (auto &[m, c] : terms_) {
        std::map<Sym, int> acc;
        for (auto &[s, k] : m.e) {
            auto it = map.find(s);
            acc[it == map.end() ? s : it->second] += k;
        }
        Mono m2;
        for (auto &[s, k] : acc)
            if (k != 0) m2.e.push_back({s, k});
        r.add_term(m2, c);
    }
    return r;
}

Poly Poly::scale_vars(const std::vector<Sym> &vars, Sym xi) const {
    Poly r;
    for (auto &[m, c] : terms_) {
        int d = m.degree_in(vars);
        r.add_term(m.mul(Mono::var(xi, d)), c);
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly &divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return Poly();
    // Shift both into the ordinary polynomial ring so lex leading-term
    // division is well-founded.
    Mono mc_n = monomial_content();
    Mono mc_d = divisor.monomial_content();
    Poly a = mul_mono(mc_n.inv());
    Poly b = divisor.mul_mono(mc_d.inv());

    Poly quot;
    Poly rem = a;
    const Mono &bm = b.terms().rbegin()->first;
    const Int &bc = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const Mono &rm = rem.terms().rbegin()->first;
        const Int &rc = rem.terms().rbegin()->second;
        Mono qm = rm.mul(bm.inv());
        for (auto &[s, k] : qm.e)
            if (k < 0) return std::nullopt;  // leading monomial does not divide
        Int qc, qr;
        mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rc.get_mpz_t(), bc.get_mpz_t());
        if (qr != 0) return std::nullopt;
        rem -= b.mul_mono(qm, qc);
        quot.add_term(qm, qc);
    }
    return quot.mul_mono(mc_n.mul(mc_d.inv()));
}

uint64_t Poly::eval_mod(const std::map<Sym, uint64_t> &assign, uint64_t p) const {
    auto mulmod = [p](uint64_t a, uint64_t b) -> uint64_t {
        return (uint64_t)((__uint128_t)a * b % p);
    };
    auto powmod_pos = [&](uint64_t a, uint64_t e) -> uint64_t {
        uint64_t r = 1, b = a % p;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    auto powmod = [&](uint64_t a, long e) -> uint64_t {
        if (e >= 0) return powmod_pos(a, (uint64_t)e);
        uint64_t inv = powmod_pos(a, p - 2);
        return powmod_pos(inv, (uint64_t)(-e));
    };
    uint64_t total = 0;
    for (auto &[m, c] : terms_) {
        Int cm = c % Int(p);
        if (cm < 0) cm += Int(p);
        uint64_t term = cm.get_ui();
        for (auto &[s, k] : m.e) {
            auto it = assign.find(s);
            if (it == assign.end())
                throw std::invalid_argument("eval_mod: unassigned symbol " + sym_name(s));
            term = mulmod(term, powmod(it->second, k));
        }
        total = (total + term) % p;
    }
    return total;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool coeff_one = (ac == 1) && !m.is_one();
        if (!coeff_one) os << ac.get_str();
        bool need_star = !coeff_one;
        for (auto &[s, k] : m.e) {
            if (need_star) os << "*";
            os << sym_name(s);
            if (k != 1) os << "^" << k;
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(const Poly &n, const Poly &d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::invalid_argument("Rat: zero denominator");
    light_normalize();
}

void Rat::light_normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Mono mn = num_.monomial_content();
    Mono md = den_.monomial_content();
    num_ = num_.mul_mono(mn.inv());
    den_ = den_.mul_mono(md.inv());
    num_ = num_.mul_mono(mn.mul(md.inv()));  // fold monomial ratio into numerator
    Int cn = num_.content();
    Int cd = den_.content();
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        num_.divide_content(g);
        den_.divide_content(g);
    }
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_one()) return;
    if (den_.size() <= 4 && num_.size() <= 512) {
        auto q = num_.divide_exact(den_);
        if (q) {
            num_ = *q;
            den_ = Poly(1L);
        }
    }
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat Rat::operator+(const Rat &o) const {
    if (den_ == o.den_) return Rat(num_ + o.num_, den_);
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator-(const Rat &o) const {
    if (den_ == o.den_) return Rat(num_ - o.num_, den_);
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rat Rat::operator*(const Rat &o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat &o) const {
    if (o.num_.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

Rat Rat::inv() const {
    if (num_.is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(den_, num_);
}

Rat Rat::pow(int k) const {
    if (k == 0) return Rat(1);
    if (k < 0) return inv().pow(-k);
    return Rat(num_.pow(k), den_.pow(k));
}

bool Rat::operator==(const Rat &o) const { return (num_ * o.den_) == (o.num_ * den_); }

Rat Rat::reduced() const {
    if (num_.is_zero()) return Rat();
    if (den_.is_one()) return *this;
    Poly g = gcd(num_, den_);
    if (g.is_constant()) return *this;
    auto qn = num_.divide_exact(g);
    auto qd = den_.divide_exact(g);
    if (!qn || !qd) return *this;
    return Rat(*qn, *qd);
}

Rat Rat::subst(Sym s, const Rat &value) const {
    if (!involves(s)) return *this;
    int lo = std::min(num_.low_deg(s), den_.low_deg(s));
    Poly n = num_, d = den_;
    if (lo < 0) {
        n = n.mul_mono(Mono::var(s, -lo));
        d = d.mul_mono(Mono::var(s, -lo));
    }
    int dn = n.deg(s), dd = d.deg(s);
    int dmax = std::max(dn, dd);
    const Poly &vn = value.num();
    const Poly &vd = value.den();
    auto eval = [&](const Poly &pp, int dtop) {
        Poly acc;
        for (int k = 0; k <= dtop; ++k) {
            Poly ck = pp.coeff_of(s, k);
            if (ck.is_zero()) continue;
            acc += ck * vn.pow(k) * vd.pow(dmax - k);
        }
        return acc;
    };
    Poly n2 = eval(n, dn);
    Poly d2 = eval(d, dd);
    if (d2.is_zero()) throw std::domain_error("Rat::subst hit a pole");
    return Rat(n2, d2);
}

Rat Rat::subst_mono(Sym s, const Mono &m, const Int &c) const {
    return Rat(num_.subst_mono(s, m, c), den_.subst_mono(s, m, c));
}

Rat Rat::rename(const std::map<Sym, Sym> &map) const {
    return Rat(num_.rename(map), den_.rename(map));
}

std::vector<Sym> Rat::symbols() const {
    auto a = num_.symbols();
    auto b = den_.symbols();
    std::set<Sym> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return std::vector<Sym>(s.begin(), s.end());
}

std::string Rat::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    bool nsimple = num_.is_monomial();
    bool dsimple = den_.is_monomial() && den_.terms().begin()->first.e.size() <= 1 &&
                   den_.terms().begin()->second == 1;
    std::string res = nsimple ? n : "(" + n + ")";
    res += "/";
    res += dsimple ? d : "(" + d + ")";
    return res;
}

}  // namespace laumon
