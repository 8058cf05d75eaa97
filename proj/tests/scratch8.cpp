// Solve for the unknown Cartan coupling constants from the bialgebra
// identity: mode-0 couplings W_ij = (phi_{i,0}-slot vs phi_j series) and
// mode-1 couplings V_ij = (phi_{i,1}, phi_{j,1}).
#include <iostream>

#include "laumon/bialgebra.hpp"
#include "laumon/expr.hpp"
#include "laumon/modp.hpp"

using namespace laumon;

static Scalar q_power(long e) { return Rat(Poly(Mono::var(sym_q(), (int)e), Int(1))); }
static long phi0_character(int n, int i, const PsiMono &beta) {
    int a = reduce_weight(i, n), b = reduce_weight(i + 1, n);
    return (long)beta.e[a - 1] - beta.e[b - 1];
}

// cartan block with symbolic couplings; handles |B| <= 1 and modes <= 1
static Scalar sym_cartan(int n, const std::vector<std::pair<int, int>> &lm, const PsiMono &beta,
                         const PhiMono &B) {
    long lt = 0;
    for (auto &[i, kk] : lm) lt += kk;
    if (lt != B.total_mode()) return Rat(0);
    Scalar chi = q_power([&] {
        long c = 0;
        for (auto &[i, kk] : lm) { (void)kk; c += phi0_character(n, i, beta); }
        return c;
    }());
    if (B.is_one()) {
        for (auto &[i, kk] : lm)
            if (kk != 0) return Rat(0);
        return chi;
    }
    if (B.modes.size() != 1 || B.modes[0].second != 1) throw std::logic_error("unsupported");
    int j = B.modes[0].first;
    Scalar total(0);
    for (size_t s = 0; s < lm.size(); ++s) {
        if (lm[s].second != 1) continue;
        bool ok = true;
        for (size_t s2 = 0; s2 < lm.size(); ++s2)
            if (s2 != s && lm[s2].second != 0) ok = false;
        if (!ok) continue;
        Scalar prod = Rat::var(intern("V_" + std::to_string(lm[s].first) + "_" + std::to_string(j)));
        for (size_t s2 = 0; s2 < lm.size(); ++s2)
            if (s2 != s)
                prod = prod * Rat::var(intern("W_" + std::to_string(lm[s2].first) + "_" +
                                              std::to_string(j)));
        total += prod;
    }
    return chi * total;
}

static Scalar my_word_ext(int n, const GenWord &w, const PsiMono &beta, const PhiMono &B,
                          const ShuffleElement &Q) {
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
                shifted.letters[x].second -= kappa[x];
            }
            Scalar cart = sym_cartan(n, lm, beta, B);
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

int main() {
    int n = 2;
    std::vector<GenWord> cw = {
        GenWord{{{1, 0}, {2, 1}, {1, -1}}}, GenWord{{{2, 0}, {2, 1}, {1, 0}}},
        GenWord{{{2, 1}, {1, 0}, {2, -1}}}, GenWord{{{1, 1}, {2, 0}, {1, -1}}},
        GenWord{{{2, 0}, {1, 1}, {2, -1}}}, GenWord{{{1, 0}, {1, 1}, {2, -1}}},
        GenWord{{{2, 1}, {2, 0}, {1, -1}}}, GenWord{{{1, 1}, {1, 0}, {2, -1}}},
    };
    std::vector<Rat> eqns;
    for (auto &w : cw) {
        ShuffleElement c = expand_word(n, w);
        for (size_t cut = 0; cut <= w.letters.size(); ++cut) {
            GenWord a, b;
            a.letters.assign(w.letters.begin(), w.letters.begin() + cut);
            b.letters.assign(w.letters.begin() + cut, w.letters.end());
            try {
                GenWord ab;
                ab.letters = w.letters;
                Scalar lhs = pair_word_shuffle(ab, c);
                Scalar rhs(0);
                TensorElement comp =
                    coproduct_component(c, word_degree_vector(n, a), word_degree(a));
                for (auto &t : comp.terms()) {
                    Scalar right = pair_word_shuffle(b, t.right.sh);
                    if (right.is_zero()) continue;
                    Scalar left = my_word_ext(n, a, t.left.psi, t.left.phi, t.left.sh);
                    rhs += t.c * left * right;
                }
                Rat diff = (lhs - rhs).reduced();
                if (!diff.is_zero()) {
                    eqns.push_back(diff);
                    std::cout << "eq: " << diff.str() << "  = 0" << std::endl;
                }
            } catch (std::logic_error &) {
            }
        }
    }
    std::cout << eqns.size() << " equations" << std::endl;
    return 0;
}
