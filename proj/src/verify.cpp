#include "verify.hpp"

#include "bracket.hpp"
#include "family.hpp"
#include "hexagon.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace w3calc {

namespace {

struct Checker {
    SuiteResult r;
    void check(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) {
            ++r.failures;
            if (r.messages.size() < 8) r.messages.push_back(what);
        }
    }
};

const Parity kParities[] = {Parity::even, Parity::odd};

HClass hadd(HClass a, const HClass& b) {
    for (const auto& [p, c] : b.terms()) a.add_normal(p, c);
    return a;
}

ExponentVector unit(int k, int i, std::int64_t v = 1) {
    ExponentVector e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i - 1)] = v;
    return e;
}

// ---- relations ------------------------------------------------------------

SuiteResult suite_relations() {
    Checker c;
    c.r.suite = "relations";
    std::mt19937_64 rng(0x7261746c01ULL);
    std::uniform_int_distribution<std::int64_t> exp_d(-5, 5);
    std::uniform_int_distribution<int> coef_d(-4, 4);
    for (Parity parity : kParities) {
        for (int rep = 0; rep < 100; ++rep) {
            int k = 2 + static_cast<int>(rng() % 5);
            std::uniform_int_distribution<int> idx_d(1, k);
            ExponentVector e(static_cast<std::size_t>(k));
            for (auto& x : e) x = exp_d(rng);
            Rational coeff = coef_d(rng);
            int i = idx_d(rng), j = idx_d(rng);
            c.check(normalize(e, coeff, i, i, parity, k).is_zero(),
                    "self-orbit class must vanish");
            if (i == j) j = (i % k) + 1;
            int lo = std::min(i, j), hi = std::max(i, j);
            HClass cls = normalize(e, coeff, lo, hi, parity, k);
            c.check(normalize(e, coeff, hi, lo, parity, k) ==
                        normalize(e, Rational(parity_sign(parity)) * coeff, lo, hi, parity, k),
                    "index swap must cost the parity sign");
            // deck generators away from the pair act trivially
            for (int l = 1; l <= k; ++l) {
                if (l == lo || l == hi) continue;
                c.check(act(unit(k, l), cls) == cls, "uninvolved deck generator must fix the class");
            }
            // t_j acts as t_i^(-1)
            c.check(act(unit(k, hi), cls) == act(unit(k, lo, -1), cls),
                    "second-index deck action must fold to an inverse first-index action");
            // deck action is additive in the exponent
            ExponentVector m1(static_cast<std::size_t>(k)), m2(static_cast<std::size_t>(k)),
                m12(static_cast<std::size_t>(k));
            for (std::size_t t = 0; t < m1.size(); ++t) {
                m1[t] = exp_d(rng);
                m2[t] = exp_d(rng);
                m12[t] = m1[t] + m2[t];
            }
            c.check(act(m1, act(m2, cls)) == act(m12, cls), "deck action must be additive");
            // normalizing a normal form is the identity
            if (!cls.is_zero()) {
                const Laurent& nf = cls.terms().begin()->second;
                HClass again(parity, k);
                for (const auto& [ee, cc] : nf.terms()) {
                    HClass piece = normalize(ee, cc, lo, hi, parity, k);
                    again = hadd(again, piece);
                }
                c.check(again == cls, "normal forms must be fixed by normalization");
            }
            // JSON round trip
            c.check(hclass_from_json(parity, k, hclass_to_json(cls)) == cls,
                    "class JSON round trip must be exact");
        }
        // face maps: deck image of the 2-point class, checked per face
        std::uniform_int_distribution<std::int64_t> small_d(-4, 4);
        for (int rep = 0; rep < 50; ++rep) {
            std::int64_t alpha = small_d(rng);
            FaceMapParams params{small_d(rng), small_d(rng)};
            HClass base = normalize({alpha, 0}, 1, 1, 2, parity, 2);
            c.check(face_image(base, Face::t3_one, params) ==
                        normalize({alpha, 0, 0}, 1, 1, 2, parity, 3),
                    "filled-last-point face must keep the class on the first pair");
            c.check(face_image(base, Face::t1_zero, params) ==
                        normalize({0, alpha, 0}, 1, 2, 3, parity, 3),
                    "dropped-first-point face must shift the class to the last pair");
            // faces are additive in the class
            std::int64_t beta = small_d(rng);
            HClass sum = hadd(normalize({alpha, 0}, 1, 1, 2, parity, 2),
                              normalize({beta, 0}, 2, 1, 2, parity, 2));
            for (Face f : {Face::double_first, Face::double_second}) {
                HClass lhs = face_image(sum, f, params);
                HClass rhs = hadd(face_image(normalize({alpha, 0}, 1, 1, 2, parity, 2), f, params),
                                  face_image(normalize({beta, 0}, 2, 1, 2, parity, 2), f, params));
                c.check(lhs == rhs, "face maps must be additive");
            }
        }
    }
    return c.r;
}

// ---- expansions -----------------------------------------------------------

ReducedClass expected_doubled(bool second_point, std::int64_t alpha, std::int64_t beta,
                              std::int64_t a, Parity parity) {
    int s = parity_sign(parity);
    ReducedClass rc;
    rc.parity = parity;
    if (!second_point) {
        rc.coeff_w12w23.add_term({alpha - beta, -beta}, -1);
        rc.coeff_w12w23.add_term({beta - alpha, -alpha}, s);
    } else {
        rc.coeff_w12w23.add_term({alpha, alpha - beta}, -1);
        rc.coeff_w12w23.add_term({beta, beta - alpha}, s);
    }
    auto pattern = [&](DiagMap& m) {
        if (alpha < beta)
            m[{alpha, beta}] = 1;
        else if (alpha > beta)
            m[{beta, alpha}] = -s;
        else if (parity == Parity::odd)
            m[{alpha, alpha}] = 1;
    };
    DiagMap d13, dmirror, dsquare;
    pattern(d13);
    pattern(dmirror);
    if (parity == Parity::odd && a != 0) dsquare[{0, 0}] = Rational(a) * a;
    if (!d13.empty()) rc.diag[P13] = d13;
    if (!second_point) {
        if (!dmirror.empty()) rc.diag[P23] = dmirror;
        if (!dsquare.empty()) rc.diag[P12] = dsquare;
    } else {
        if (!dmirror.empty()) rc.diag[P12] = dmirror;
        if (!dsquare.empty()) rc.diag[P23] = dsquare;
    }
    return rc;
}

SuiteResult suite_expansions() {
    Checker c;
    c.r.suite = "expansions";
    for (Parity parity : kParities) {
        for (std::int64_t alpha = -3; alpha <= 3; ++alpha) {
            for (std::int64_t beta = -3; beta <= 3; ++beta) {
                for (std::int64_t a = -2; a <= 2; ++a) {
                    for (bool second : {false, true}) {
                        Face face = second ? Face::double_second : Face::double_first;
                        FaceMapParams params = second ? FaceMapParams{0, a} : FaceMapParams{a, 0};
                        HClass f = face_image(normalize({alpha, 0}, 1, 1, 2, parity, 2), face, params);
                        HClass g = face_image(normalize({beta, 0}, 1, 1, 2, parity, 2), face, params);
                        BracketSum sum = expand(f, g);
                        if (a != 0)
                            c.check(sum.terms.size() == 9,
                                    "doubled-point bracket must expand into 9 summands");
                        ReducedClass rc = reduce(sum);
                        std::ostringstream what;
                        what << "doubled-" << (second ? "second" : "first")
                             << " pipeline mismatch at alpha=" << alpha << " beta=" << beta
                             << " a=" << a << " parity=" << parity_name(parity);
                        c.check(rc == expected_doubled(second, alpha, beta, a, parity), what.str());
                    }
                }
            }
        }
        // base pairing: [t1^a w12, t3^b w23] carries coefficient t1^a t3^b
        for (std::int64_t a = -3; a <= 3; ++a) {
            for (std::int64_t b = -3; b <= 3; ++b) {
                HClass f = normalize({a, 0, 0}, 1, 1, 2, parity, 3);
                HClass g = normalize({0, 0, b}, 1, 2, 3, parity, 3);
                ReducedClass rc = reduce(expand(f, g));
                c.check(rc.diag.empty() && rc.coeff_w12w23 == t13_monomial(a, b),
                        "base mixed pairing must reduce to a single monomial");
            }
        }
        // [t^m (w_ij + w_il), t^m w_lj] collapses for every labeling
        std::mt19937_64 rng(0x657870616eULL);
        std::uniform_int_distribution<std::int64_t> m_d(-3, 3);
        const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
        for (int rep = 0; rep < 30; ++rep) {
            ExponentVector m{m_d(rng), m_d(rng), m_d(rng)};
            ExponentVector z(3, 0);
            for (const auto& perm : perms) {
                int i = perm[0], j = perm[1], l = perm[2];
                HClass f = act(m, hadd(normalize(z, 1, i, j, parity, 3),
                                       normalize(z, 1, i, l, parity, 3)));
                HClass g = act(m, normalize(z, 1, l, j, parity, 3));
                c.check(reduce(expand(f, g)).is_zero(),
                        "two-route pairing against the closing pair must cancel");
            }
        }
    }
    return c.r;
}

// ---- hexagon --------------------------------------------------------------

Laurent random_poly(std::mt19937_64& rng, int max_terms, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> e_d(lo, hi);
    std::uniform_int_distribution<int> c_d(-5, 5);
    std::uniform_int_distribution<int> n_d(1, max_terms);
    Laurent p(coeff_vars());
    int n = n_d(rng);
    for (int t = 0; t < n; ++t) {
        int coeff = c_d(rng);
        if (coeff == 0) coeff = 1;
        p.add_term({e_d(rng), e_d(rng)}, coeff);
    }
    return p;
}

// Membership decided independently of residues: v lies in the span iff
// appending it to the relator rows leaves the rank unchanged.
bool member_by_rank(const DihedralOrbit& orbit, Parity parity, const std::vector<Rational>& v) {
    std::map<Mono2, std::size_t> col;
    for (std::size_t i = 0; i < orbit.members.size(); ++i) col[orbit.members[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (Mono2 m : orbit.members) {
        Laurent rel = hex_relator(m.first, m.second, parity);
        std::vector<Rational> row(orbit.members.size(), Rational(0));
        for (const auto& [e, cc] : rel.terms()) row[col.at({e[0], e[1]})] = cc;
        rows.push_back(std::move(row));
    }
    std::size_t base_rank = rref(rows).rank();
    rows.push_back(v);
    return rref(rows).rank() == base_rank;
}

SuiteResult suite_hexagon() {
    Checker c;
    c.r.suite = "hexagon";
    std::mt19937_64 rng(0x6865786102ULL);
    std::uniform_int_distribution<std::int64_t> seed_d(-50, 50);
    // relators reduce to zero and never leave their orbit
    for (int rep = 0; rep < 500; ++rep) {
        std::int64_t alpha = seed_d(rng), beta = seed_d(rng);
        for (Parity parity : kParities) {
            Laurent rel = hex_relator(alpha, beta, parity);
            c.check(reduce_mod_relators(rel, parity).is_zero(), "relator must reduce to zero");
            if (!rel.is_zero()) {
                const auto& first = rel.terms().begin()->first;
                DihedralOrbit orbit = orbit_of({first[0], first[1]});
                bool confined = true;
                for (const auto& [e, cc] : rel.terms())
                    confined = confined &&
                               std::binary_search(orbit.members.begin(), orbit.members.end(),
                                                  Mono2{e[0], e[1]});
                c.check(confined, "relator support must stay inside one orbit");
            }
        }
    }
    // dihedral algebra on random pairs
    for (int rep = 0; rep < 1000; ++rep) {
        Mono2 u{seed_d(rng), seed_d(rng)};
        c.check(sigma(tau(sigma(u))) == tau_inv(u), "conjugating the rotation must invert it");
        Mono2 v = u;
        for (int t = 0; t < 3; ++t) v = tau(v);
        c.check(v == Mono2(-u.first, -u.second), "rotation cubed must negate");
        for (int t = 0; t < 3; ++t) v = tau(v);
        c.check(v == u, "rotation must have order six");
    }
    // reduction is linear and idempotent
    for (int rep = 0; rep < 100; ++rep) {
        for (Parity parity : kParities) {
            Laurent p = random_poly(rng, 6, -8, 8);
            Laurent q = random_poly(rng, 6, -8, 8);
            c.check(reduce_mod_relators(lp_add(p, q), parity) ==
                        lp_add(reduce_mod_relators(p, parity), reduce_mod_relators(q, parity)),
                    "reduction must be additive");
            Laurent r = reduce_mod_relators(p, parity);
            c.check(reduce_mod_relators(r, parity) == r, "reduction must be idempotent");
            Restriction topo = Restriction::topological;
            Laurent rt = reduce_mod_relators(p, parity, topo);
            c.check(reduce_mod_relators(rt, parity, topo) == rt,
                    "restricted reduction must be idempotent");
        }
    }
    // membership cross-check between residues and rank augmentation
    std::uniform_int_distribution<int> comb_d(-3, 3);
    for (int rep = 0; rep < 200; ++rep) {
        Parity parity = (rep % 2 == 0) ? Parity::even : Parity::odd;
        DihedralOrbit orbit = orbit_of({seed_d(rng), seed_d(rng)});
        std::vector<Rational> v(orbit.members.size(), Rational(0));
        Laurent p(coeff_vars());
        if (rep % 3 != 0) {
            // random combination of relators seeded in the orbit
            for (Mono2 m : orbit.members) {
                int w = comb_d(rng);
                if (w == 0) continue;
                p = lp_add(p, lp_scale(hex_relator(m.first, m.second, parity), Rational(w)));
            }
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) {
                int w = comb_d(rng);
                if (w != 0) p.add_term({orbit.members[i].first, orbit.members[i].second}, w);
            }
        }
        std::map<Mono2, std::size_t> col;
        for (std::size_t i = 0; i < orbit.members.size(); ++i) col[orbit.members[i]] = i;
        for (const auto& [e, cc] : p.terms()) v[col.at({e[0], e[1]})] = cc;
        c.check(in_relator_span(p, parity) == member_by_rank(orbit, parity, v),
                "membership oracles must agree");
    }
    // orbit landmarks
    DihedralOrbit free13 = orbit_of({1, 3});
    c.check(free13.members.size() == 12 && free13.free_orbit() && free13.sigma_fixed.empty(),
            "the (1,3) orbit must be free of size 12");
    DihedralOrbit small = orbit_of({1, 2});
    std::vector<Mono2> expect_small{{-2, -1}, {-1, -2}, {-1, 1}, {1, -1}, {1, 2}, {2, 1}};
    c.check(small.members == expect_small, "the (1,2) orbit must have the six known members");
    c.check(small.sigma_fixed == std::vector<Mono2>({{-1, 1}, {1, -1}}),
            "the (1,2) orbit must have two reflection-fixed points");
    c.check(small.sigma_invariant_tau_orbit, "the (1,2) rotation orbit must be reflection-invariant");
    c.check(orbit_of({0, 0}).members.size() == 1, "the origin must be a fixed point of everything");
    for (Parity parity : kParities) {
        c.check(orbit_relator_rank({1, 3}, parity) == 5, "free-orbit relator span must have rank 5");
        c.check(orbit_relator_rank({2, 5}, parity) == 5, "free-orbit relator span must have rank 5");
        c.check(orbit_relator_rank({-4, 9}, parity) == 5, "free-orbit relator span must have rank 5");
        c.check(!in_relator_span(t13_monomial(1, 1), parity),
                "a single free-orbit monomial must survive the quotient");
    }
    return c.r;
}

// ---- ledger ---------------------------------------------------------------

SuiteResult suite_ledger() {
    Checker c;
    c.r.suite = "ledger";
    for (std::int64_t k = 3; k <= 64; ++k) {
        for (Parity parity : kParities) {
            std::ostringstream what;
            what << "k=" << k << " parity=" << parity_name(parity);
            c.check(aggregate(delta_ledger(k), parity) == w3_closed_form(k, parity),
                    "ledger aggregation must match the closed form at " + what.str());
            c.check(assembly_check(k, parity), "assembly identity must hold at " + what.str());
        }
    }
    // per-dot value at k=4, even
    Laurent per_dot(coeff_vars());
    per_dot.add_term({-1, -3}, 1);
    per_dot.add_term({-3, -1}, 1);
    per_dot.add_term({-2, 1}, -1);
    per_dot.add_term({1, -2}, -1);
    c.check(aggregate_records(delta_ledger(4).generic, 4, Parity::even) == per_dot,
            "generic dot at k=4 even must match its printed value");
    // closed form at k=4, even
    Laurent closed4(coeff_vars());
    closed4.add_term({-1, -3}, 3);
    closed4.add_term({-3, -1}, 3);
    closed4.add_term({-2, 1}, -3);
    closed4.add_term({1, -2}, -3);
    closed4.add_term({1, 3}, 1);
    closed4.add_term({3, 1}, 1);
    closed4.add_term({-3, -2}, -1);
    closed4.add_term({-2, -3}, -1);
    c.check(w3_closed_form(4, Parity::even) == closed4,
            "closed form at k=4 even must match its printed value");
    // one record, solved by hand
    CrossingRecord single{PairingKind::co31, {-2, 1}, PairingKind::co23, {1, -1}, +1, +1};
    for (std::int64_t k : {5, 9}) {
        for (Parity parity : kParities) {
            c.check(aggregate_records({single}, k, parity) == t13_monomial(-1, 1 - k),
                    "lone record must contribute one plus-signed monomial");
        }
    }
    c.check(aggregate(Ledger{7, {}, {}}, Parity::even).is_zero(), "empty ledger must aggregate to zero");
    // serialization
    Ledger l5 = delta_ledger(5);
    Ledger round = ledger_from_json(ledger_to_json(l5));
    for (Parity parity : kParities)
        c.check(aggregate(round, parity) == aggregate(l5, parity),
                "ledger JSON round trip must preserve the aggregate");
    c.check(affine_parse("k-2").c0 == -2 && affine_parse("k-2").c1 == 1, "affine parse k-2");
    c.check(affine_parse("2-k").c0 == 2 && affine_parse("2-k").c1 == -1, "affine parse 2-k");
    c.check(affine_parse("-3*k+1").c0 == 1 && affine_parse("-3*k+1").c1 == -3, "affine parse -3*k+1");
    for (const AffineInt& a :
         std::initializer_list<AffineInt>{{0, 1}, {2, -1}, {-2, 1}, {0, -4}, {7, 0}, {-1, 3}})
        c.check(affine_parse(affine_str(a)) == a, "affine string round trip");
    // malformed inputs are rejected
    auto rejects = [&](const nlohmann::json& j, const std::string& what) {
        try {
            ledger_from_json(j);
            c.check(false, what);
        } catch (const std::exception&) {
            c.check(true, what);
        }
    };
    nlohmann::json bad = ledger_to_json(l5);
    bad["generic"][0]["first"]["kind"] = "Co31";
    bad["generic"][0]["second"]["kind"] = "Co13";
    rejects(bad, "underdetermined pairing must be rejected");
    bad = ledger_to_json(l5);
    bad["generic"][0]["sign"]["even"] = 2;
    rejects(bad, "non-unit crossing sign must be rejected");
    bad = ledger_to_json(l5);
    bad["k"] = 2;
    rejects(bad, "too small k must be rejected");
    return c.r;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"relations", "expansions", "hexagon", "ledger"};
}

SuiteResult run_suite(const std::string& name) {
    if (name == "relations") return suite_relations();
    if (name == "expansions") return suite_expansions();
    if (name == "hexagon") return suite_hexagon();
    if (name == "ledger") return suite_ledger();
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

} // namespace w3calc
