#include "bracket.hpp"

#include <stdexcept>

namespace w3calc {

BracketSum expand(const HClass& f, const HClass& g) {
    if (f.k() != 3 || g.k() != 3)
        throw std::invalid_argument("bracket expansion is defined on 3-point classes");
    if (f.parity() != g.parity())
        throw std::invalid_argument("bracket operands must share parity");
    BracketSum out;
    out.parity = f.parity();
    for (const auto& [pf, cf] : f.terms())
        for (const auto& [ef, kf] : cf.terms())
            for (const auto& [pg, cg] : g.terms())
                for (const auto& [eg, kg] : cg.terms())
                    out.terms.push_back({kf * kg,
                                         {pf, ef[static_cast<std::size_t>(pf.i - 1)]},
                                         {pg, eg[static_cast<std::size_t>(pg.i - 1)]}});
    return out;
}

int base_sign(IndexPair P, IndexPair Q, Parity parity) {
    int s = parity_sign(parity);
    if (P == P12 && Q == P23) return +1;
    if (P == P23 && Q == P12) return -s;
    if (P == P13 && Q == P23) return -1;
    if (P == P23 && Q == P13) return +s;
    if (P == P12 && Q == P13) return -1;
    if (P == P13 && Q == P12) return +s;
    throw std::invalid_argument("base_sign needs two distinct standard pairs");
}

namespace {

// Deck translate m with m[gauge] = 0 satisfying
// m[L.i-1] - m[L.j-1] = L.e and m[R.i-1] - m[R.j-1] = R.e.
ExponentVector solve_deck(const NormalGen& L, const NormalGen& R, int gauge) {
    int u[2];
    int n = 0;
    for (int t = 0; t < 3; ++t)
        if (t != gauge) u[n++] = t;
    auto row = [&](const IndexPair& p, std::int64_t (&coef)[2]) {
        coef[0] = coef[1] = 0;
        for (int c = 0; c < 2; ++c) {
            if (u[c] == p.i - 1) coef[c] += 1;
            if (u[c] == p.j - 1) coef[c] -= 1;
        }
    };
    std::int64_t a[2], b[2];
    row(L.p, a);
    row(R.p, b);
    std::int64_t det = a[0] * b[1] - a[1] * b[0];
    if (det == 0) throw std::logic_error("degenerate deck translate system");
    std::int64_t n0 = L.e * b[1] - a[1] * R.e;
    std::int64_t n1 = a[0] * R.e - L.e * b[0];
    if (n0 % det != 0 || n1 % det != 0)
        throw std::logic_error("non-integral deck translate");
    ExponentVector m(3, 0);
    m[static_cast<std::size_t>(u[0])] = n0 / det;
    m[static_cast<std::size_t>(u[1])] = n1 / det;
    return m;
}

} // namespace

ReducedClass reduce_with_gauge(const BracketSum& s, int gauge) {
    if (gauge < 0 || gauge > 2)
        throw std::invalid_argument("gauge coordinate must be 0, 1 or 2");
    int sg = parity_sign(s.parity);
    ReducedClass out;
    out.parity = s.parity;
    for (const auto& t : s.terms) {
        if (t.c == 0) continue;
        if (t.left.p == t.right.p) {
            std::int64_t a = t.left.e, b = t.right.e;
            Rational c = t.c;
            if (a > b) {
                std::swap(a, b);
                c *= -sg; // [f,g] = (-1)^(n-1) [g,f]
            }
            if (a == b && s.parity == Parity::even) continue; // [x,x] = -[x,x]
            auto& bucket = out.diag[t.left.p];
            auto it = bucket.emplace(DiagKey{a, b}, Rational(0)).first;
            it->second += c;
            if (it->second == 0) bucket.erase(it);
        } else {
            ExponentVector m = solve_deck(t.left, t.right, gauge);
            out.coeff_w12w23.add_term({m[0] - m[1], m[2] - m[1]},
                                      t.c * base_sign(t.left.p, t.right.p, s.parity));
        }
    }
    for (auto it = out.diag.begin(); it != out.diag.end();)
        it = it->second.empty() ? out.diag.erase(it) : std::next(it);
    return out;
}

ReducedClass reduce(const BracketSum& s) { return reduce_with_gauge(s, 2); }

Laurent closure_reduce(const ReducedClass& r) {
    int s = parity_sign(r.parity);
    Laurent out = r.coeff_w12w23;
    auto it = r.diag.find(P13);
    if (it != r.diag.end()) {
        for (const auto& [key, c] : it->second) {
            const auto& [a, b] = key;
            out.add_term({a - b, -b}, -c);
            out.add_term({b - a, -a}, s * c);
        }
    }
    return out;
}

} // namespace w3calc
