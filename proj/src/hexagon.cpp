#include "hexagon.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace w3calc {

Mono2 tau(Mono2 u) { return {u.second, u.second - u.first}; }
Mono2 tau_inv(Mono2 u) { return {u.first - u.second, u.first}; }
Mono2 sigma(Mono2 u) { return {-u.second, -u.first}; }

DihedralOrbit orbit_of(Mono2 seed) {
    std::set<Mono2> tau_orbit;
    for (Mono2 u = seed; tau_orbit.insert(u).second;) u = tau(u);
    std::set<Mono2> members(tau_orbit);
    for (Mono2 u : tau_orbit) {
        Mono2 v = sigma(u);
        while (members.insert(v).second) v = tau(v);
    }
    DihedralOrbit out;
    out.members.assign(members.begin(), members.end());
    for (Mono2 u : out.members)
        if (sigma(u) == u) out.sigma_fixed.push_back(u);
    out.sigma_invariant_tau_orbit =
        std::all_of(tau_orbit.begin(), tau_orbit.end(),
                    [&](Mono2 u) { return tau_orbit.count(sigma(u)) != 0; });
    return out;
}

Laurent hex_relator(std::int64_t alpha, std::int64_t beta, Parity parity) {
    int s = parity_sign(parity);
    Laurent out(coeff_vars());
    out.add_term({alpha - beta, -beta}, 1);
    out.add_term({alpha, alpha - beta}, -1);
    out.add_term({beta, beta - alpha}, s);
    out.add_term({beta - alpha, -alpha}, -s);
    return out;
}

bool survives_restriction(Mono2 u) {
    return u.first != 0 && u.second != 0 && u.first != u.second;
}

std::string restriction_name(Restriction r) {
    return r == Restriction::none ? "none" : "topological";
}

Restriction restriction_parse(const std::string& s) {
    if (s == "none") return Restriction::none;
    if (s == "topological") return Restriction::topological;
    throw std::invalid_argument("restriction must be 'none' or 'topological', got '" + s + "'");
}

namespace {

Mono2 term_pos(const ExponentVector& e) { return {e[0], e[1]}; }

// Rows of the relator span inside one orbit, in the orbit's coordinates.
// Every relator whose support meets the orbit is seeded at an orbit member,
// so seeding at all members is exhaustive.
std::vector<std::vector<Rational>> orbit_relator_rows(const DihedralOrbit& orbit,
                                                      Parity parity, Restriction r) {
    std::map<Mono2, std::size_t> col;
    for (std::size_t i = 0; i < orbit.members.size(); ++i) col[orbit.members[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (Mono2 m : orbit.members) {
        Laurent rel = hex_relator(m.first, m.second, parity);
        std::vector<Rational> row(orbit.members.size(), Rational(0));
        bool nonzero = false;
        for (const auto& [e, c] : rel.terms()) {
            auto it = col.find(term_pos(e));
            if (it == col.end())
                throw std::logic_error("relator support escaped its dihedral orbit");
            row[it->second] = c;
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    if (r == Restriction::topological) {
        for (std::size_t i = 0; i < orbit.members.size(); ++i) {
            if (survives_restriction(orbit.members[i])) continue;
            std::vector<Rational> row(orbit.members.size(), Rational(0));
            row[i] = 1;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

Laurent reduce_mod_relators(const Laurent& p, Parity parity, Restriction r) {
    if (p.vars() != coeff_vars())
        throw std::invalid_argument("reduction expects a polynomial in t1, t3");
    Laurent out(coeff_vars());
    std::set<Mono2> done;
    for (const auto& [e, c] : p.terms()) {
        Mono2 seed = term_pos(e);
        if (done.count(seed)) continue;
        DihedralOrbit orbit = orbit_of(seed);
        for (Mono2 m : orbit.members) done.insert(m);
        EchelonForm ech = rref(orbit_relator_rows(orbit, parity, r));
        std::vector<Rational> v(orbit.members.size(), Rational(0));
        for (std::size_t i = 0; i < orbit.members.size(); ++i) {
            auto it = p.terms().find({orbit.members[i].first, orbit.members[i].second});
            if (it != p.terms().end()) v[i] = it->second;
        }
        reduce_against(v, ech);
        for (std::size_t i = 0; i < orbit.members.size(); ++i)
            if (v[i] != 0)
                out.add_term({orbit.members[i].first, orbit.members[i].second}, v[i]);
    }
    return out;
}

bool in_relator_span(const Laurent& p, Parity parity, Restriction r) {
    return reduce_mod_relators(p, parity, r).is_zero();
}

std::size_t orbit_relator_rank(Mono2 seed, Parity parity, Restriction r) {
    DihedralOrbit orbit = orbit_of(seed);
    return rref(orbit_relator_rows(orbit, parity, r)).rank();
}

} // namespace w3calc
