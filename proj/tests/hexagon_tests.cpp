#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexagon.hpp"
#include "support/membership.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace w3calc;

TEST_CASE("lattice generators have the dihedral relations") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-40, 40);
    for (int rep = 0; rep < 300; ++rep) {
        Mono2 u{d(rng), d(rng)};
        CHECK(tau_inv(tau(u)) == u);
        CHECK(sigma(sigma(u)) == u);
        CHECK(sigma(tau(sigma(u))) == tau_inv(u));
        Mono2 v = u;
        for (int t = 0; t < 3; ++t) v = tau(v);
        CHECK(v == Mono2(-u.first, -u.second));
        for (int t = 0; t < 3; ++t) v = tau(v);
        CHECK(v == u);
    }
    CHECK(tau({1, 3}) == Mono2{3, 2});
    CHECK(sigma({1, 3}) == Mono2{-3, -1});
}

TEST_CASE("orbits close up with the documented shapes") {
    DihedralOrbit free13 = orbit_of({1, 3});
    CHECK(free13.members.size() == 12);
    CHECK(free13.free_orbit());
    CHECK(free13.sigma_fixed.empty());
    CHECK_FALSE(free13.sigma_invariant_tau_orbit);
    // every member regenerates the same orbit
    for (Mono2 m : free13.members) CHECK(orbit_of(m).members == free13.members);

    DihedralOrbit six = orbit_of({1, 2});
    CHECK(six.members ==
          std::vector<Mono2>({{-2, -1}, {-1, -2}, {-1, 1}, {1, -1}, {1, 2}, {2, 1}}));
    CHECK(six.sigma_fixed == std::vector<Mono2>({{-1, 1}, {1, -1}}));
    CHECK(six.sigma_invariant_tau_orbit);

    DihedralOrbit origin = orbit_of({0, 0});
    CHECK(origin.members == std::vector<Mono2>({{0, 0}}));
    CHECK(origin.sigma_fixed.size() == 1);
}

TEST_CASE("relators have at most four monomials and stay in one orbit") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int rep = 0; rep < 300; ++rep) {
        std::int64_t a = d(rng), b = d(rng);
        for (Parity parity : {Parity::even, Parity::odd}) {
            Laurent rel = hex_relator(a, b, parity);
            CHECK(rel.terms().size() <= 4);
            CHECK(reduce_mod_relators(rel, parity).is_zero());
            if (rel.is_zero()) continue;
            const auto& e0 = rel.terms().begin()->first;
            DihedralOrbit orbit = orbit_of({e0[0], e0[1]});
            for (const auto& [e, c] : rel.terms()) {
                bool inside = std::binary_search(orbit.members.begin(), orbit.members.end(),
                                                 Mono2{e[0], e[1]});
                CHECK(inside);
            }
        }
    }
    // degenerate seeds
    CHECK(hex_relator(0, 0, Parity::even).is_zero());
    CHECK(hex_relator(0, 0, Parity::odd).is_zero());
    CHECK(hex_relator(2, 2, Parity::even).is_zero());
    Laurent odd22 = hex_relator(2, 2, Parity::odd);
    Laurent want(coeff_vars());
    want.add_term({0, -2}, 2);
    want.add_term({2, 0}, -2);
    CHECK(odd22 == want);
}

TEST_CASE("reduction is linear, idempotent, and orbit-local") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> e_d(-9, 9);
    std::uniform_int_distribution<int> c_d(-5, 5);
    auto rand_poly = [&] {
        Laurent p(coeff_vars());
        for (int t = 0; t < 6; ++t) p.add_term({e_d(rng), e_d(rng)}, c_d(rng));
        return p;
    };
    for (int rep = 0; rep < 60; ++rep) {
        for (Parity parity : {Parity::even, Parity::odd}) {
            Laurent p = rand_poly(), q = rand_poly();
            Laurent rp = reduce_mod_relators(p, parity);
            CHECK(reduce_mod_relators(lp_add(p, q), parity) ==
                  lp_add(rp, reduce_mod_relators(q, parity)));
            CHECK(reduce_mod_relators(rp, parity) == rp);
            CHECK(reduce_mod_relators(lp_scale(p, Rational(3, 7)), parity) ==
                  lp_scale(rp, Rational(3, 7)));
        }
    }
    CHECK(reduce_mod_relators(t13_zero(), Parity::even).is_zero());
    CHECK_THROWS_AS(reduce_mod_relators(Laurent(cfg_vars(3)), Parity::even),
                    std::invalid_argument);
}

TEST_CASE("free-orbit relator span has rank five") {
    for (Parity parity : {Parity::even, Parity::odd}) {
        CHECK(orbit_relator_rank({1, 3}, parity) == 5);
        CHECK(orbit_relator_rank({2, 7}, parity) == 5);
        CHECK(orbit_relator_rank({-5, 11}, parity) == 5);
        CHECK_FALSE(in_relator_span(t13_monomial(1, 1), parity));
    }
}

TEST_CASE("topological restriction kills non-surviving positions") {
    CHECK(survives_restriction({1, 3}));
    CHECK_FALSE(survives_restriction({0, 3}));
    CHECK_FALSE(survives_restriction({3, 0}));
    CHECK_FALSE(survives_restriction({2, 2}));
    for (Parity parity : {Parity::even, Parity::odd}) {
        // the (1,1) orbit consists entirely of non-surviving positions
        CHECK_FALSE(in_relator_span(t13_monomial(1, 1), parity, Restriction::none));
        CHECK(in_relator_span(t13_monomial(1, 1), parity, Restriction::topological));
        CHECK(orbit_relator_rank({1, 1}, parity, Restriction::topological) == 6);
        // a free orbit of surviving positions is untouched by the restriction
        CHECK(orbit_relator_rank({1, 3}, parity, Restriction::topological) == 5);
    }
    CHECK(restriction_parse("none") == Restriction::none);
    CHECK(restriction_parse("topological") == Restriction::topological);
    CHECK(restriction_name(Restriction::topological) == "topological");
    CHECK_THROWS_AS(restriction_parse("smooth"), std::invalid_argument);
}

TEST_CASE("echelon reduction agrees with an integer elimination oracle") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> seed_d(-30, 30);
    std::uniform_int_distribution<int> c_d(-3, 3);
    int members_seen = 0;
    for (int rep = 0; rep < 200; ++rep) {
        Parity parity = rep % 2 == 0 ? Parity::even : Parity::odd;
        DihedralOrbit orbit = orbit_of({seed_d(rng), seed_d(rng)});
        std::map<Mono2, std::size_t> col;
        for (std::size_t i = 0; i < orbit.members.size(); ++i) col[orbit.members[i]] = i;
        std::vector<std::vector<Int>> rows;
        for (Mono2 m : orbit.members) {
            Laurent rel = hex_relator(m.first, m.second, parity);
            std::vector<Int> row(orbit.members.size(), 0);
            for (const auto& [e, c] : rel.terms())
                row[col.at({e[0], e[1]})] = numerator(c);
            rows.push_back(std::move(row));
        }
        // half the samples are integer relator combinations, half arbitrary
        Laurent p(coeff_vars());
        std::vector<Int> v(orbit.members.size(), 0);
        if (rep % 2 == 0) {
            for (Mono2 m : orbit.members) {
                int w = c_d(rng);
                if (w == 0) continue;
                p = lp_add(p, lp_scale(hex_relator(m.first, m.second, parity), Rational(w)));
            }
        } else {
            for (Mono2 m : orbit.members) {
                int w = c_d(rng);
                if (w != 0) p.add_term({m.first, m.second}, w);
            }
        }
        for (const auto& [e, c] : p.terms()) v[col.at({e[0], e[1]})] = numerator(c);
        bool lib = in_relator_span(p, parity);
        bool oracle = w3test::bareiss_member(rows, v);
        CHECK(lib == oracle);
        if (lib) ++members_seen;
    }
    CHECK(members_seen > 20); // both answers exercised
}
