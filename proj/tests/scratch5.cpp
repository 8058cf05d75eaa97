// Calibration battery: find the convention set under which the bialgebra
// identity (a*b, c) = (a (x) b, Delta c) holds on many word cases.
#include <cassert>
#include <iostream>

#include "laumon/bialgebra.hpp"
#include "laumon/expr.hpp"

using namespace laumon;

static Scalar q_power(long e) { return Rat(Poly(Mono::var(sym_q(), (int)e), Int(1))); }

// variant knobs
struct Knobs {
    int outer;    // 1: a vs c_(1);  2: a vs c_(2)
    int psichi;   // -1, 0, +1 multiplier on the psi/phi0 character
    int phidir;   // +1: series coefficients with q^{c}; -1: with q^{-c}
    int kshift;   // +1: letter modes shifted down by kappa; -1: shifted up
};

static long phi0_character(int n, int i, const PsiMono &beta) {
    int a = reduce_weight(i, n), b = reduce_weight(i + 1, n);
    return (long)beta.e[a - 1] - beta.e[b - 1];
}

static Scalar my_cartan(int n, const std::vector<std::pair<int, int>> &left_modes,
                        const PsiMono &beta, const PhiMono &B, const Knobs &K) {
    long chi = 0;
    for (auto &[i, kk] : left_modes) { (void)kk; chi += phi0_character(n, i, beta); }
    chi *= K.psichi;
    long lt = 0, rt = 0;
    for (auto &[i, kk] : left_modes) lt += kk;
    for (auto &[j, ll] : B.modes) rt += ll;
    if (lt != rt) return Rat(0);
    int S = (int)left_modes.size(), T = (int)B.modes.size();
    auto coeff = [&](int s, int t, int m) -> Scalar {
        long c = K.phidir * c_matrix(n, left_modes[s].first, B.modes[t].first);
        if (m == 0) return q_power(c);
        return q_power(c * (m + 1)) - q_power(c * (m - 1));
    };
    Scalar total(0);
    std::vector<int> colrem(T);
    for (int t = 0; t < T; ++t) colrem[t] = B.modes[t].second;
    std::function<void(int, int, int, Scalar)> rec = [&](int s, int t, int rowrem, Scalar acc) {
        if (s == S) {
            for (int x : colrem)
                if (x) return;
            total += acc;
            return;
        }
        if (t == T) {
            if (rowrem) return;
            rec(s + 1, 0, s + 1 < S ? left_modes[s + 1].second : 0, acc);
            return;
        }
        for (int m = 0; m <= std::min(rowrem, colrem[t]); ++m) {
            colrem[t] -= m;
            rec(s, t + 1, rowrem - m, acc * coeff(s, t, m));
            colrem[t] += m;
        }
    };
    if (S == 0) {
        bool z = true;
        for (int x : colrem) z &= (x == 0);
        total = z ? Rat(1) : Rat(0);
    } else {
        rec(0, 0, left_modes[0].second, Rat(1));
    }
    return q_power(chi) * total;
}

static Scalar my_word_ext(int n, const GenWord &w, const PsiMono &beta, const PhiMono &B,
                          const ShuffleElement &Q, const Knobs &K) {
    int total = B.total_mode();
    int kk = w.size();
    Scalar result(0);
    std::vector<int> kappa(kk, 0);
    std::function<void(int, int)> rec = [&](int a, int rem) {
        if (a == kk) {
            if (rem) return;
            std::vector<std::pair<int, int>> lm(kk);
            GenWord shifted = w;
            for (int x = 0; x < kk; ++x) {
                lm[x] = {reduce_weight(w.letters[x].first, n), kappa[x]};
                shifted.letters[x].second -= K.kshift * kappa[x];
            }
            Scalar cart = my_cartan(n, lm, beta, B, K);
            if (cart.is_zero()) return;
            Scalar ws = pair_word_shuffle(shifted, Q);
            if (!ws.is_zero()) result += cart * ws;
            return;
        }
        for (int m = 0; m <= rem; ++m) {
            kappa[a] = m;
            rec(a + 1, rem - m);
        }
        kappa[a] = 0;
    };
    rec(0, total);
    return result;
}

static bool my_bialg(int n, const GenWord &a, const GenWord &b, const ShuffleElement &c,
                     const Knobs &K) {
    GenWord ab;
    ab.letters = a.letters;
    ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
    Scalar lhs = pair_word_shuffle(ab, c);
    Scalar rhs(0);
    DegreeVector ka = word_degree_vector(n, a), kb = word_degree_vector(n, b);
    if (ka + kb == c.k() && word_degree(a) + word_degree(b) == c.d()) {
        const GenWord &wleft = (K.outer == 1) ? a : b;   // pairs against c_(1)
        const GenWord &wright = (K.outer == 1) ? b : a;  // pairs against c_(2)
        DegreeVector l = word_degree_vector(n, wleft);
        TensorElement comp = coproduct_component(c, l, word_degree(wleft));
        for (auto &t : comp.terms()) {
            Scalar right = pair_word_shuffle(wright, t.right.sh);
            if (right.is_zero()) continue;
            Scalar left = my_word_ext(n, wleft, t.left.psi, t.left.phi, t.left.sh, K);
            rhs += t.c * left * right;
        }
    }
    return lhs == rhs;
}

int main() {
    for (int n : {2}) {
    std::vector<GenWord> cw = {
        GenWord{{{1, 0}, {2, 0}}},  GenWord{{{2, 0}, {1, 0}}},  GenWord{{{1, 1}, {2, -1}}},
        GenWord{{{1, 0}, {1, 0}}},  GenWord{{{1, 2}, {1, 0}}},
        GenWord{{{1, 0}, {2, 1}, {1, -1}}}, GenWord{{{2, 0}, {2, 1}, {1, 0}}},
        GenWord{{{1, 1}, {1, 0}, {1, -1}}},
    };
    for (int outer : {1})
        for (int psichi : {1})
            for (int phidir : {1})
                for (int kshift : {1})  {
                    Knobs K{outer, psichi, phidir, kshift};
                    int pass = 0, total = 0;
                    for (auto &w : cw) {
                        ShuffleElement c = expand_word(n, w);
                        for (size_t cut = 0; cut <= w.letters.size(); ++cut) {
                            GenWord a, b;
                            a.letters.assign(w.letters.begin(), w.letters.begin() + cut);
                            b.letters.assign(w.letters.begin() + cut, w.letters.end());
                            ++total;
                            if (my_bialg(n, a, b, c, K)) ++pass;
                            else {
                                std::cout << "FAIL cut=" << cut << " word:";
                                for (auto &[i, cc] : w.letters) std::cout << " (" << i << "," << cc << ")";
                                std::cout << std::endl;
                            }
                        }
                    }
                    std::cout << "n=" << n << " outer=" << outer << " psichi=" << psichi
                              << " phidir=" << phidir << " kshift=" << kshift << " : " << pass
                              << "/" << total << std::endl;
                }
    }
    return 0;
}
