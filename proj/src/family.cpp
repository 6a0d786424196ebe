#include "family.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace w3calc {

Laurent w3_closed_form(std::int64_t k, Parity parity) {
    if (k < 3) throw std::invalid_argument("closed form needs k >= 3");
    int s = parity_sign(parity);
    Laurent out(coeff_vars());
    Rational km1(k - 1);
    out.add_term({-1, 1 - k}, km1);
    out.add_term({1 - k, -1}, s * km1);
    out.add_term({2 - k, 1}, -km1);
    out.add_term({1, 2 - k}, -s * km1);
    out.add_term({1, k - 1}, 1);
    out.add_term({k - 1, 1}, s);
    out.add_term({1 - k, 2 - k}, -1);
    out.add_term({2 - k, 1 - k}, -s);
    return out;
}

std::string pairing_kind_name(PairingKind k) {
    switch (k) {
        case PairingKind::co21: return "Co21";
        case PairingKind::co31: return "Co31";
        case PairingKind::co13: return "Co13";
        case PairingKind::co23: return "Co23";
    }
    throw std::invalid_argument("unknown pairing kind");
}

PairingKind pairing_kind_parse(const std::string& s) {
    if (s == "Co21") return PairingKind::co21;
    if (s == "Co31") return PairingKind::co31;
    if (s == "Co13") return PairingKind::co13;
    if (s == "Co23") return PairingKind::co23;
    throw std::invalid_argument("unknown pairing kind '" + s + "'");
}

int intrinsic_sign(PairingKind k) {
    return (k == PairingKind::co21 || k == PairingKind::co13) ? +1 : -1;
}

std::string affine_str(const AffineInt& a) {
    if (a.c1 == 0) return std::to_string(a.c0);
    std::string kpart =
        (a.c1 == 1 || a.c1 == -1) ? "k" : std::to_string(std::llabs(a.c1)) + "*k";
    if (a.c1 > 0) {
        std::string out = kpart;
        if (a.c0 > 0) out += "+" + std::to_string(a.c0);
        if (a.c0 < 0) out += "-" + std::to_string(-a.c0);
        return out;
    }
    if (a.c0 != 0) return std::to_string(a.c0) + "-" + kpart;
    return "-" + kpart;
}

AffineInt affine_parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    AffineInt out;
    bool any = false;
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            if (t[i] == '-') sign = -1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("missing sign between terms in '" + s + "'");
        }
        std::size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        std::int64_t num = 1;
        bool have_num = false;
        if (j > i) {
            num = std::stoll(t.substr(i, j - i));
            have_num = true;
            i = j;
        }
        if (i < t.size() && t[i] == '*') {
            if (!have_num) throw std::invalid_argument("stray '*' in '" + s + "'");
            ++i;
            if (i >= t.size() || t[i] != 'k')
                throw std::invalid_argument("expected k after '*' in '" + s + "'");
        }
        if (i < t.size() && t[i] == 'k') {
            out.c1 += sign * num;
            ++i;
        } else if (have_num) {
            out.c0 += sign * num;
        } else {
            throw std::invalid_argument("bad term in affine expression '" + s + "'");
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("empty affine expression");
    return out;
}

Mono2 record_position(const CrossingRecord& r, std::int64_t k) {
    std::int64_t g1 = r.first_gamma.at(k);
    std::int64_t g2 = r.second_gamma.at(k);
    if (r.first_kind == PairingKind::co21) {
        // alpha = g1
        if (r.second_kind == PairingKind::co13) return {g1, g1 + g2}; // beta - alpha = g2
        if (r.second_kind == PairingKind::co23) return {g1, g2};      // beta = g2
    } else if (r.first_kind == PairingKind::co31) {
        // alpha - beta = g1
        if (r.second_kind == PairingKind::co23) return {g1 + g2, g2}; // beta = g2
        if (r.second_kind == PairingKind::co13)
            throw std::invalid_argument("Co31/Co13 pairing does not pin a monomial");
    }
    throw std::invalid_argument("record needs a first kind Co21/Co31 and a second kind Co13/Co23");
}

int record_sign(const CrossingRecord& r, Parity parity) {
    return parity == Parity::even ? r.sign_even : r.sign_odd;
}

Ledger delta_ledger(std::int64_t k) {
    if (k < 3) throw std::invalid_argument("ledger needs k >= 3");
    auto rec = [](PairingKind fk, std::int64_t f0, std::int64_t f1,
                  PairingKind sk, std::int64_t s0, std::int64_t s1,
                  int se, int so) {
        return CrossingRecord{fk, {f0, f1}, sk, {s0, s1}, se, so};
    };
    using PK = PairingKind;
    Ledger l;
    l.k = k;
    l.generic = {
        rec(PK::co21, 2, -1, PK::co13, -1, 1, -1, -1),
        rec(PK::co21, 1, -1, PK::co13, -2, 1, +1, -1),
        rec(PK::co31, -2, 1, PK::co23, 1, -1, +1, +1),
        rec(PK::co31, -1, 1, PK::co23, 2, -1, -1, +1),
    };
    l.last = {
        rec(PK::co21, 2, -1, PK::co23, 1, -1, +1, -1),
        rec(PK::co21, 1, -1, PK::co23, 2, -1, +1, +1),
        rec(PK::co21, 2, -1, PK::co13, -1, 1, -1, -1),
        rec(PK::co21, 1, -1, PK::co13, -2, 1, +1, -1),
        rec(PK::co21, -1, 1, PK::co13, 2, -1, +1, -1),
        rec(PK::co31, 2, -1, PK::co23, -1, 1, +1, +1),
        rec(PK::co31, -2, 1, PK::co23, 1, -1, +1, +1),
        rec(PK::co31, -1, 1, PK::co23, 2, -1, -1, +1),
    };
    return l;
}

Laurent aggregate_records(const std::vector<CrossingRecord>& records,
                          std::int64_t k, Parity parity) {
    Laurent out(coeff_vars());
    for (const auto& r : records) {
        Mono2 pos = record_position(r, k);
        int c = record_sign(r, parity) * intrinsic_sign(r.first_kind) *
                intrinsic_sign(r.second_kind);
        out.add_term({pos.first, pos.second}, c);
    }
    return out;
}

Laurent aggregate(const Ledger& ledger, Parity parity) {
    Laurent g = aggregate_records(ledger.generic, ledger.k, parity);
    Laurent l = aggregate_records(ledger.last, ledger.k, parity);
    return lp_add(lp_scale(g, Rational(ledger.k - 2)), l);
}

namespace {

nlohmann::json record_to_json(const CrossingRecord& r) {
    nlohmann::json j;
    j["first"] = {{"kind", pairing_kind_name(r.first_kind)},
                  {"gamma", affine_str(r.first_gamma)}};
    j["second"] = {{"kind", pairing_kind_name(r.second_kind)},
                   {"gamma", affine_str(r.second_gamma)}};
    j["sign"] = {{"even", r.sign_even}, {"odd", r.sign_odd}};
    return j;
}

CrossingRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("ledger record must be an object");
    CrossingRecord r;
    r.first_kind = pairing_kind_parse(j.at("first").at("kind").get<std::string>());
    r.first_gamma = affine_parse(j.at("first").at("gamma").get<std::string>());
    r.second_kind = pairing_kind_parse(j.at("second").at("kind").get<std::string>());
    r.second_gamma = affine_parse(j.at("second").at("gamma").get<std::string>());
    if (r.first_kind != PairingKind::co21 && r.first_kind != PairingKind::co31)
        throw std::invalid_argument("first pairing kind must be Co21 or Co31");
    if (r.second_kind != PairingKind::co13 && r.second_kind != PairingKind::co23)
        throw std::invalid_argument("second pairing kind must be Co13 or Co23");
    if (r.first_kind == PairingKind::co31 && r.second_kind == PairingKind::co13)
        throw std::invalid_argument("Co31/Co13 pairing does not pin a monomial");
    r.sign_even = j.at("sign").at("even").get<int>();
    r.sign_odd = j.at("sign").at("odd").get<int>();
    if (std::abs(r.sign_even) != 1 || std::abs(r.sign_odd) != 1)
        throw std::invalid_argument("crossing signs must be +1 or -1");
    return r;
}

} // namespace

nlohmann::json ledger_to_json(const Ledger& ledger) {
    nlohmann::json j;
    j["k"] = ledger.k;
    j["generic"] = nlohmann::json::array();
    for (const auto& r : ledger.generic) j["generic"].push_back(record_to_json(r));
    j["last"] = nlohmann::json::array();
    for (const auto& r : ledger.last) j["last"].push_back(record_to_json(r));
    return j;
}

Ledger ledger_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("ledger must be a JSON object");
    if (!j.contains("k") || !j.at("k").is_number_integer())
        throw std::invalid_argument("ledger needs an integer field k");
    Ledger l;
    l.k = j.at("k").get<std::int64_t>();
    if (l.k < 3) throw std::invalid_argument("ledger k must be at least 3");
    for (const char* key : {"generic", "last"}) {
        if (!j.contains(key) || !j.at(key).is_array())
            throw std::invalid_argument(std::string("ledger needs an array field ") + key);
        auto& dst = std::string(key) == "generic" ? l.generic : l.last;
        for (const auto& r : j.at(key)) dst.push_back(record_from_json(r));
    }
    return l;
}

bool assembly_check(std::int64_t k, Parity parity) {
    Ledger l = delta_ledger(k);
    Laurent per_dot = aggregate_records(l.generic, k, parity);
    Laurent last = aggregate_records(l.last, k, parity);
    Laurent closed = w3_closed_form(k, parity);
    bool residual = lp_sub(last, per_dot) ==
                    lp_sub(closed, lp_scale(per_dot, Rational(k - 1)));
    bool total = lp_add(lp_scale(per_dot, Rational(k - 2)), last) == closed;
    return residual && total;
}

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["labels"] = c.labels;
    j["matrix"] = nlohmann::json::array();
    for (const auto& row : c.matrix) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(rational_str(v));
        j["matrix"].push_back(std::move(r));
    }
    j["rank"] = c.rank;
    j["pivots"] = c.pivots;
    j["restriction"] = restriction_name(c.restriction);
    return j;
}

namespace {

template <typename Fn>
void parallel_map(std::size_t n, int nthreads, Fn fn) {
    std::size_t hw = std::thread::hardware_concurrency();
    std::size_t w = nthreads > 0 ? static_cast<std::size_t>(nthreads) : std::max<std::size_t>(hw, 1);
    w = std::min(w, n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace

Certificate rank_mod_relators(const std::vector<std::pair<std::string, Laurent>>& elements,
                              Parity parity, Restriction restriction, int nthreads) {
    Certificate cert;
    cert.restriction = restriction;
    std::vector<Laurent> residues(elements.size(), Laurent(coeff_vars()));
    parallel_map(elements.size(), nthreads, [&](std::size_t i) {
        residues[i] = reduce_mod_relators(elements[i].second, parity, restriction);
    });
    std::map<ExponentVector, std::size_t, GradedLex> col;
    for (const auto& r : residues)
        for (const auto& [e, c] : r.terms()) col.emplace(e, 0);
    std::size_t idx = 0;
    for (auto& [e, i] : col) i = idx++;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        cert.labels.push_back(elements[i].first);
        std::vector<Rational> row(col.size(), Rational(0));
        for (const auto& [e, c] : residues[i].terms()) row[col.at(e)] = c;
        cert.matrix.push_back(std::move(row));
    }
    EchelonForm ech = rref(cert.matrix);
    cert.rank = ech.rank();
    cert.pivots = ech.pivots;
    return cert;
}

Certificate independence_certificate(std::int64_t kmin, std::int64_t kmax, Parity parity,
                                     Restriction restriction, int nthreads) {
    if (kmin < 4) throw std::invalid_argument("independence range starts at k = 4");
    if (kmax < kmin) throw std::invalid_argument("independence range must satisfy kmin <= kmax");
    std::vector<std::pair<std::string, Laurent>> elements;
    elements.reserve(static_cast<std::size_t>(kmax - kmin + 1));
    for (std::int64_t k = kmin; k <= kmax; ++k)
        elements.emplace_back("delta" + std::to_string(k), w3_closed_form(k, parity));
    return rank_mod_relators(elements, parity, restriction, nthreads);
}

} // namespace w3calc
