#pragma once

#include "hexagon.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace w3calc {

// Closed form of the degree-3 invariant of the k-fold family:
// (k-1)(t1^-1 t3^(1-k) + (-1)^n t1^(1-k) t3^-1 - t1^(2-k) t3 - (-1)^n t1 t3^(2-k))
// + t1 t3^(k-1) + (-1)^n t1^(k-1) t3 - t1^(1-k) t3^(2-k) - (-1)^n t1^(2-k) t3^(1-k)
Laurent w3_closed_form(std::int64_t k, Parity parity);

// Crossing-pair ledger: each record pairs one first-point datum with one
// second-point datum; the two translate equations pin a unique monomial.
enum class PairingKind { co21, co31, co13, co23 };

std::string pairing_kind_name(PairingKind k);
PairingKind pairing_kind_parse(const std::string& s);
int intrinsic_sign(PairingKind k); // co21 +, co31 -, co13 +, co23 -

// gamma = c0 + c1*k, serialized as strings like "2", "k-2", "2-k", "3*k".
struct AffineInt {
    std::int64_t c0 = 0, c1 = 0;
    std::int64_t at(std::int64_t k) const { return c0 + c1 * k; }
    bool operator==(const AffineInt&) const = default;
};

std::string affine_str(const AffineInt& a);
AffineInt affine_parse(const std::string& s);

struct CrossingRecord {
    PairingKind first_kind = PairingKind::co21; // co21: alpha = g1; co31: alpha-beta = g1
    AffineInt first_gamma;
    PairingKind second_kind = PairingKind::co13; // co13: beta-alpha = g2; co23: beta = g2
    AffineInt second_gamma;
    int sign_even = 1, sign_odd = 1;
};

// The (alpha, beta) monomial position pinned by the record at a given k.
Mono2 record_position(const CrossingRecord& r, std::int64_t k);
int record_sign(const CrossingRecord& r, Parity parity);

struct Ledger {
    std::int64_t k = 3;
    std::vector<CrossingRecord> generic; // counted k-2 times
    std::vector<CrossingRecord> last;    // counted once
};

// The bundled crossing data for the k-fold family.
Ledger delta_ledger(std::int64_t k);

Laurent aggregate_records(const std::vector<CrossingRecord>& records,
                          std::int64_t k, Parity parity);
// (k-2) * aggregate(generic) + aggregate(last)
Laurent aggregate(const Ledger& ledger, Parity parity);

nlohmann::json ledger_to_json(const Ledger& ledger);
Ledger ledger_from_json(const nlohmann::json& j);

// last-dot sum minus the per-dot sum must equal the closed form minus
// (k-1) copies of the per-dot sum; both with exact coefficients.
bool assembly_check(std::int64_t k, Parity parity);

struct Certificate {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> matrix; // rows parallel to labels
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Restriction restriction = Restriction::none;
    bool full_rank() const { return rank == labels.size(); }
};

nlohmann::json certificate_to_json(const Certificate& c);

// Exact rank of the residues of the given elements in the quotient.
// nthreads = 0 picks a worker count automatically; any worker count yields
// the identical certificate.
Certificate rank_mod_relators(const std::vector<std::pair<std::string, Laurent>>& elements,
                              Parity parity, Restriction restriction, int nthreads = 0);

// Certificate for {closed form at k} over kmin..kmax; requires 4 <= kmin <= kmax.
Certificate independence_certificate(std::int64_t kmin, std::int64_t kmax, Parity parity,
                                     Restriction restriction, int nthreads = 0);

} // namespace w3calc
