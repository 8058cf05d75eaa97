#include <iostream>

#include "laumon/expr.hpp"
#include "laumon/laumon_module.hpp"
#include "laumon/modp.hpp"

using namespace laumon;

int main() {
    int n = 2;
    NumCtx ctx = NumCtx::random(n, 42);
    // two letters: act_shuffle(expand_word) == composition of e-matrices
    for (auto [i1, c1, i2, c2, d1, d2] : std::vector<std::array<int, 6>>{
             {1, 0, 2, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {2, 1, 1, -1, 1, 0}, {1, 1, 1, 0, 0, 1},
             {2, 0, 2, 1, 1, 1}}) {
        DegreeVector d{{d1, d2}};
        GenWord w{{{i1, c1}, {i2, c2}}};
        ShuffleElement P = expand_word(n, w);
        ModuleOperator A = act_shuffle(P, +1, d, &ctx);
        DegreeVector dmid = d + DegreeVector::unit(n, i2);
        ModuleOperator C = op_compose(e_matrix(n, i1, c1, dmid), e_matrix(n, i2, c2, d));
        // evaluate C's entries in ctx
        ModuleOperator Cn = C;
        for (auto &[k, v] : Cn.entries) v = ctx.rat(v);
        bool ok = true;
        ModuleOperator diff = op_add(A, op_scale(Cn, Rat(-1)));
        for (auto &[k, v] : diff.entries)
            if (!v.is_zero()) ok = false;
        std::cout << "act_shuffle(word " << i1 << "," << c1 << ";" << i2 << "," << c2
                  << ") on K_(" << d1 << "," << d2 << "): " << ok << std::endl;
    }
    // minus side words
    for (auto [i1, c1, i2, c2, d1, d2] : std::vector<std::array<int, 6>>{
             {1, 0, 2, 0, 1, 1}, {1, 1, 1, 0, 2, 0}}) {
        DegreeVector d{{d1, d2}};
        GenWord w{{{i1, c1}, {i2, c2}}};
        ShuffleElement P = expand_word(n, w);
        ModuleOperator A = act_shuffle(P, -1, d, &ctx);
        // word e-f side: (e_{i1,c1} e_{i2,c2})^- acts as f_{i1,c1} then f_{i2,c2}?
        DegreeVector dmid1 = d - DegreeVector::unit(n, i1);
        ModuleOperator C1 = op_compose(f_matrix(n, i2, c2, dmid1), f_matrix(n, i1, c1, d));
        DegreeVector dmid2 = d - DegreeVector::unit(n, i2);
        ModuleOperator C2 = op_compose(f_matrix(n, i1, c1, dmid2), f_matrix(n, i2, c2, d));
        for (auto *C : {&C1, &C2}) {
            ModuleOperator Cn = *C;
            for (auto &[k, v] : Cn.entries) v = ctx.rat(v);
            ModuleOperator diff = op_add(A, op_scale(Cn, Rat(-1)));
            bool ok = true;
            for (auto &[k, v] : diff.entries)
                if (!v.is_zero()) ok = false;
            std::cout << "  minus word (" << i1 << "," << c1 << ";" << i2 << "," << c2
                      << ") order" << (C == &C1 ? 1 : 2) << ": " << ok << std::endl;
        }
    }
    return 0;
}
