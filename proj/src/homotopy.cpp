#include "homotopy.hpp"

#include <json.hpp>

#include <stdexcept>

namespace w3calc {

std::string parity_name(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

Parity parity_parse(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd', got '" + s + "'");
}

HClass::HClass(Parity parity, int k) : parity_(parity), k_(k) {
    if (k < 2) throw std::invalid_argument("configuration point count must be at least 2");
}

HClass& HClass::add_normal(IndexPair p, const Laurent& coeff) {
    if (!(1 <= p.i && p.i < p.j && p.j <= k_))
        throw std::invalid_argument("generator indices out of range or unordered");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(p, coeff);
    } else {
        Laurent s = lp_add(it->second, coeff);
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
    return *this;
}

bool HClass::operator==(const HClass& o) const {
    return parity_ == o.parity_ && k_ == o.k_ && terms_ == o.terms_;
}

HClass normalize(const ExponentVector& exps, const Rational& coeff,
                 int i, int j, Parity parity, int k) {
    if (static_cast<int>(exps.size()) != k)
        throw std::invalid_argument("monomial width does not match point count");
    if (i < 1 || i > k || j < 1 || j > k)
        throw std::invalid_argument("generator indices out of range");
    HClass out(parity, k);
    if (i == j || coeff == 0) return out; // w_ii = 0
    Rational c = coeff;
    if (i > j) {
        std::swap(i, j);
        c *= parity_sign(parity); // w_ji = (-1)^n w_ij
    }
    // t_l (l not in {i,j}) drops; t_j folds as t_i^(-1).
    std::int64_t e = exps[static_cast<std::size_t>(i - 1)] - exps[static_cast<std::size_t>(j - 1)];
    ExponentVector norm(static_cast<std::size_t>(k), 0);
    norm[static_cast<std::size_t>(i - 1)] = e;
    out.add_normal({i, j}, Laurent::monomial(cfg_vars(k), norm, c));
    return out;
}

HClass act(const ExponentVector& mono, const HClass& c) {
    if (static_cast<int>(mono.size()) != c.k())
        throw std::invalid_argument("deck monomial width does not match point count");
    HClass out(c.parity(), c.k());
    for (const auto& [p, coeff] : c.terms()) {
        std::int64_t shift = mono[static_cast<std::size_t>(p.i - 1)] -
                             mono[static_cast<std::size_t>(p.j - 1)];
        if (shift == 0) {
            out.add_normal(p, coeff);
            continue;
        }
        Laurent shifted(coeff.vars());
        for (const auto& [e, k] : coeff.terms()) {
            ExponentVector e2 = e;
            e2[static_cast<std::size_t>(p.i - 1)] += shift;
            shifted.add_term(e2, k);
        }
        out.add_normal(p, shifted);
    }
    return out;
}

std::string face_name(Face f) {
    switch (f) {
        case Face::t1_zero: return "t1_zero";
        case Face::double_first: return "double_first";
        case Face::double_second: return "double_second";
        case Face::t3_one: return "t3_one";
    }
    throw std::invalid_argument("unknown face tag");
}

namespace {

struct GeneratorImage {
    Rational coeff;
    int i, j; // unordered target pair
};

struct FaceData {
    ExponentVector t1_image; // exponents over (t1,t2,t3)
    std::vector<GeneratorImage> w12_image;
};

FaceData face_data(Face face, const FaceMapParams& params) {
    switch (face) {
        case Face::t1_zero:
            return {{0, 1, 0}, {{1, 2, 3}}};
        case Face::double_first:
            return {{1, 1, 0}, {{1, 1, 3}, {1, 2, 3}, {params.a1, 2, 1}}};
        case Face::double_second:
            return {{1, 0, 0}, {{1, 1, 2}, {1, 1, 3}, {params.a2, 2, 3}}};
        case Face::t3_one:
            return {{1, 0, 0}, {{1, 1, 2}}};
    }
    throw std::invalid_argument("unknown face tag");
}

} // namespace

HClass face_image(const HClass& c, Face face, FaceMapParams params) {
    if (c.k() != 2)
        throw std::invalid_argument("face maps apply to 2-point classes");
    FaceData data = face_data(face, params);
    HClass out(c.parity(), 3);
    for (const auto& [p, coeff] : c.terms()) {
        (void)p; // only (1,2) exists at k=2
        for (const auto& [e, cf] : coeff.terms()) {
            std::int64_t alpha = e[0]; // normal form: exponent on t1
            ExponentVector mono(3, 0);
            for (std::size_t t = 0; t < 3; ++t) mono[t] = data.t1_image[t] * alpha;
            for (const auto& gi : data.w12_image) {
                if (gi.coeff == 0) continue;
                HClass piece = normalize(mono, cf * gi.coeff, gi.i, gi.j, c.parity(), 3);
                for (const auto& [pp, cc] : piece.terms()) out.add_normal(pp, cc);
            }
        }
    }
    return out;
}

nlohmann::json hclass_to_json(const HClass& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, coeff] : c.terms()) {
        nlohmann::json t;
        t["i"] = p.i;
        t["j"] = p.j;
        t["poly"] = poly_to_json(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

HClass hclass_from_json(Parity parity, int k, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("class JSON must be an array of terms");
    HClass out(parity, k);
    for (const auto& t : j) {
        int i = t.at("i").get<int>();
        int jj = t.at("j").get<int>();
        Laurent coeff = poly_from_json(cfg_vars(k), t.at("poly"));
        // Route through normalize so foreign input lands in normal form.
        for (const auto& [e, cf] : coeff.terms()) {
            HClass piece = normalize(e, cf, i, jj, parity, k);
            for (const auto& [pp, cc] : piece.terms()) out.add_normal(pp, cc);
        }
    }
    return out;
}

} // namespace w3calc
