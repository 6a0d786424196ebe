#pragma once

#include "homotopy.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace w3calc {

// Normal-form generator t_i^e w_ij on the 3-point space.
struct NormalGen {
    IndexPair p;
    std::int64_t e = 0;
    auto operator<=>(const NormalGen&) const = default;
};

// One bilinear summand c * [t_i^e w_ij, t_i'^e' w_i'j'].
struct BracketTerm {
    Rational c;
    NormalGen left, right;
};

struct BracketSum {
    Parity parity = Parity::even;
    std::vector<BracketTerm> terms;
};

// Bilinear expansion of [f, g]; both classes must live on 3 points and share parity.
BracketSum expand(const HClass& f, const HClass& g);

// [w_P, w_Q] = base_sign(P, Q, parity) * [w12, w23] for distinct standard pairs.
int base_sign(IndexPair P, IndexPair Q, Parity parity);

using DiagKey = std::pair<std::int64_t, std::int64_t>;
using DiagMap = std::map<DiagKey, Rational>;

// Collected form of a bracket sum: a t1,t3-Laurent coefficient on [w12, w23]
// plus same-pair diagonal brackets [t^a w_P, t^b w_P] keyed by (a, b), a <= b.
struct ReducedClass {
    Parity parity = Parity::even;
    Laurent coeff_w12w23 = Laurent(coeff_vars());
    std::map<IndexPair, DiagMap> diag;

    bool is_zero() const { return coeff_w12w23.is_zero() && diag.empty(); }
    bool operator==(const ReducedClass& o) const {
        return parity == o.parity && coeff_w12w23 == o.coeff_w12w23 && diag == o.diag;
    }
    bool operator!=(const ReducedClass& o) const { return !(*this == o); }
};

// Rewrites every mixed-pair term as a deck translate of [w12, w23] and collects
// diagonal terms with a <= b (swapping costs (-1)^(n-1)); an equal-exponent
// diagonal drops when n is even. gauge in {0,1,2} picks which deck coordinate
// is pinned to zero while solving the translate; the result is gauge-invariant.
ReducedClass reduce_with_gauge(const BracketSum& s, int gauge);
ReducedClass reduce(const BracketSum& s);

// Rewrites each (1,3)-diagonal entry (a,b) -> c as the coefficient contribution
// -c*t1^(a-b)t3^(-b) + (-1)^n c*t1^(b-a)t3^(-a); the (1,2)- and (2,3)-diagonals
// carry no coefficient and are dropped. Returns the total t1,t3 coefficient.
Laurent closure_reduce(const ReducedClass& r);

} // namespace w3calc
