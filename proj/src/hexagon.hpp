#pragma once

#include "homotopy.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace w3calc {

// Exponent pair (t1 power, t3 power).
using Mono2 = std::pair<std::int64_t, std::int64_t>;

// Order-6 lattice map and the reflection generating the order-12 dihedral
// group under which the relator subgroup decomposes orbit by orbit.
Mono2 tau(Mono2 u);     // (u1,u2) -> (u2, u2-u1)
Mono2 tau_inv(Mono2 u); // (u1,u2) -> (u1-u2, u1)
Mono2 sigma(Mono2 u);   // (u1,u2) -> (-u2, -u1)

struct DihedralOrbit {
    std::vector<Mono2> members;     // sorted ascending
    std::vector<Mono2> sigma_fixed; // members with sigma(m) == m
    bool sigma_invariant_tau_orbit = false;
    bool free_orbit() const { return members.size() == 12; }
};

DihedralOrbit orbit_of(Mono2 seed);

// t1^(a-b) t3^(-b) - t1^a t3^(a-b) + (-1)^n t1^b t3^(b-a) - (-1)^n t1^(b-a) t3^(-a)
Laurent hex_relator(std::int64_t alpha, std::int64_t beta, Parity parity);

// Positions visible to the topological quotient: a != 0, b != 0, a != b.
bool survives_restriction(Mono2 u);

enum class Restriction { none, topological };
std::string restriction_name(Restriction r);
Restriction restriction_parse(const std::string& s);

// Canonical residue of p modulo the relator span (per-orbit echelon reduction).
// With Restriction::topological every non-surviving position is additionally
// quotiented away, modeling the worst-case extra kernel.
Laurent reduce_mod_relators(const Laurent& p, Parity parity,
                            Restriction r = Restriction::none);

bool in_relator_span(const Laurent& p, Parity parity,
                     Restriction r = Restriction::none);

// Dimension of the relator span restricted to the orbit of seed.
std::size_t orbit_relator_rank(Mono2 seed, Parity parity,
                               Restriction r = Restriction::none);

} // namespace w3calc
