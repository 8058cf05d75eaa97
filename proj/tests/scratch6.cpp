#include <iostream>

#include "laumon/expr.hpp"
#include "laumon/laumon_module.hpp"
#include "laumon/modp.hpp"

using namespace laumon;

int main() {
    // fixed point counts
    {
        auto p1 = enumerate_fixed_points(1, DegreeVector{{2}});
        std::cout << "n=1 d=(2): " << p1.size() << " (want 2)\n";
        auto p2 = enumerate_fixed_points(2, DegreeVector{{1, 0}});
        std::cout << "n=2 d=(1,0): " << p2.size() << " (want 1)\n";
        auto p3 = enumerate_fixed_points(2, DegreeVector{{0, 0}});
        std::cout << "n=2 d=0: " << p3.size() << " (want 1)\n";
        auto p4 = enumerate_fixed_points(1, DegreeVector{{4}});
        std::cout << "n=1 d=(4): " << p4.size() << " (want 5)\n";
    }
    // taut character n=1 partition (2): t1^{-2}(1+q^2)
    {
        auto pts = enumerate_fixed_points(1, DegreeVector{{2}});
        for (auto &p : pts) {
            Character c = taut_character(p, 1);
            std::cout << "fp " << p.str() << " rank=" << char_rank(c) << ": ";
            for (auto &[m, mult] : c) std::cout << Poly(m, Int(mult)).str() << " ; ";
            std::cout << "\n";
        }
    }
    // character cross-checks on all points, n<=2, |d|<=2
    {
        bool all = true;
        for (int n = 1; n <= 2; ++n) {
            std::vector<DegreeVector> degs;
            if (n == 1)
                degs = {{{0}}, {{1}}, {{2}}, {{3}}};
            else
                degs = {{{0, 0}}, {{1, 0}}, {{0, 1}}, {{1, 1}}, {{2, 0}}, {{2, 1}}};
            for (auto &dd : degs)
                for (auto &p : enumerate_fixed_points(n, dd)) {
                    for (int k = 1; k <= n; ++k)
                        if (!(w_character(p, k) == w_character_via_tw(p, k))) {
                            std::cout << "w mismatch at " << p.str() << " k=" << k << "\n";
                            all = false;
                        }
                    if (!(tangent_character(p) == tangent_character_via_tan(p))) {
                        std::cout << "tan mismatch at " << p.str() << "\n";
                        all = false;
                    }
                    if (char_rank(tangent_character(p)) != 2 * p.size()) {
                        std::cout << "tan rank mismatch at " << p.str() << "\n";
                        all = false;
                    }
                    for (int k = 1; k <= n; ++k)
                        if (char_rank(w_character(p, k)) != 1) {
                            std::cout << "w rank != 1 at " << p.str() << "\n";
                            all = false;
                        }
                }
        }
        std::cout << "character cross-checks: " << (all ? "OK" : "FAILED") << "\n";
    }
    // ext vs tangent on the diagonal; via_tan route
    {
        bool all = true;
        for (auto &dd : std::vector<DegreeVector>{{{1, 0}}, {{1, 1}}, {{2, 1}}})
            for (auto &p : enumerate_fixed_points(2, dd)) {
                if (!(ext_character(p, p) == tangent_character(p))) all = false;
                for (auto &p2 : enumerate_fixed_points(2, dd))
                    if (!(ext_character(p, p2) == ext_character_via_tan(p, p2))) all = false;
            }
        std::cout << "ext cross-checks: " << (all ? "OK" : "FAILED") << "\n";
    }
    // vacuum psi eigenvalue: (-1)^i t_i^{-1} q^{-1}
    {
        auto op = psi_matrix(2, 1, DegreeVector{{0, 0}});
        Scalar want = Rat(Poly(Mono::var(sym_t(1), -1).mul(Mono::var(sym_q(), -1)), Int(-1)));
        std::cout << "vacuum psi_1: " << print_scalar(op.entries.begin()->second)
                  << " (want " << print_scalar(want) << ")\n";
    }
    // localization partition of unity: sum over p of 1/Lambda(Tan) * [p]-class
    {
        bool ok = true;
        for (auto &p : enumerate_fixed_points(2, DegreeVector{{1, 1}})) {
            Scalar l = lambda_at_one(tangent_character(p));
            if (l.is_zero()) ok = false;
        }
        std::cout << "tangent Lambda nonzero: " << ok << "\n";
    }
    // e_matrix from K_0: single entry, and Theorem act identity
    {
        DegreeVector d0{{0, 0}};
        auto E = e_matrix(2, 1, 0, d0);
        std::cout << "e_matrix K0 entries: " << E.entries.size() << "\n";
        for (auto &[k, v] : E.entries) std::cout << "  e[" << k.first << "," << k.second
                                                 << "] = " << print_scalar(v) << "\n";
        std::cout << "act identity e (K0, n=2, S=(1,1)): "
                  << check_act_identity_e(2, 1, 0, d0, {1, 1}) << "\n";
        std::cout << "act identity e (K_{(1,0)}, n=2, S=(1,1), k=1): "
                  << check_act_identity_e(2, 1, 1, DegreeVector{{1, 0}}, {1, 1}) << "\n";
        std::cout << "act identity e (K_{(1,1)}, n=2, S=(2,1), k=-1): "
                  << check_act_identity_e(2, 2, -1, DegreeVector{{1, 1}}, {2, 1}) << "\n";
        std::cout << "act identity f (K_{(1,0)}, n=2, S=(1,1)): "
                  << check_act_identity_f(2, 1, 0, DegreeVector{{1, 0}}, {1, 1}) << "\n";
        std::cout << "act identity f (K_{(1,1)}, n=2, S=(1,2), k=1): "
                  << check_act_identity_f(2, 2, 1, DegreeVector{{1, 1}}, {1, 2}) << "\n";
    }
    return 0;
}
