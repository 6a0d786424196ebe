#include "laurent.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace w3calc {

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    return a < b;
}

Laurent::Laurent(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Laurent Laurent::monomial(std::vector<std::string> vars, ExponentVector exps, Rational coeff) {
    Laurent p(std::move(vars));
    p.add_term(exps, coeff);
    return p;
}

void Laurent::check_width(const ExponentVector& e) const {
    if (e.size() != vars_.size())
        throw std::invalid_argument("exponent vector width does not match variable declaration");
}

Laurent& Laurent::add_term(const ExponentVector& exps, const Rational& coeff) {
    check_width(exps);
    if (coeff == 0) return *this;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

bool Laurent::operator==(const Laurent& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

static void require_same_vars(const Laurent& a, const Laurent& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("variable declaration mismatch");
}

Laurent lp_add(const Laurent& a, const Laurent& b) {
    require_same_vars(a, b);
    Laurent r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

Laurent lp_sub(const Laurent& a, const Laurent& b) {
    require_same_vars(a, b);
    Laurent r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

Laurent lp_neg(const Laurent& a) {
    Laurent r(a.vars());
    for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
    return r;
}

Laurent lp_mul(const Laurent& a, const Laurent& b) {
    require_same_vars(a, b);
    Laurent r(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            ExponentVector e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Laurent lp_scale(const Laurent& a, const Rational& c) {
    Laurent r(a.vars());
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms()) r.add_term(e, k * c);
    return r;
}

Laurent lp_subst(const Laurent& p,
                 const std::vector<std::string>& target_vars,
                 const std::map<std::string, MonomialImage>& images) {
    for (const auto& v : p.vars()) {
        auto it = images.find(v);
        if (it == images.end())
            throw std::invalid_argument("substitution missing image for variable " + v);
        if (it->second.exps.size() != target_vars.size())
            throw std::invalid_argument("substitution image width mismatch for " + v);
        if (it->second.coeff == 0)
            throw std::invalid_argument("substitution image for " + v + " is not invertible");
    }
    Laurent r(target_vars);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector out(target_vars.size(), 0);
        Rational coeff = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const MonomialImage& img = images.at(p.vars()[i]);
            for (std::size_t t = 0; t < out.size(); ++t) out[t] += img.exps[t] * e[i];
            if (img.coeff != 1) {
                Rational base = img.coeff;
                std::int64_t exp = e[i];
                if (exp < 0) {
                    base = Rational(denominator(base), numerator(base));
                    exp = -exp;
                }
                for (std::int64_t n = 0; n < exp; ++n) coeff *= base;
            }
        }
        r.add_term(out, coeff);
    }
    return r;
}

Rational lp_eval(const Laurent& p, const std::vector<Rational>& values) {
    if (values.size() != p.nvars())
        throw std::invalid_argument("evaluation point width mismatch");
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (values[i] == 0)
                throw std::domain_error("evaluation at zero with negative exponent possible");
            Rational base = values[i];
            std::int64_t exp = e[i];
            if (exp < 0) {
                base = Rational(denominator(base), numerator(base));
                exp = -exp;
            }
            for (std::int64_t n = 0; n < exp; ++n) term *= base;
        }
        total += term;
    }
    return total;
}

nlohmann::json poly_to_json(const Laurent& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["exponents"] = e;
        t["coeff"] = rational_str(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

Laurent poly_from_json(std::vector<std::string> vars, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
    Laurent p(std::move(vars));
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
            throw std::invalid_argument("polynomial term must carry exponents and coeff");
        ExponentVector e = t.at("exponents").get<ExponentVector>();
        Rational c = rational_parse(t.at("coeff").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

const std::vector<std::string>& coeff_vars() {
    static const std::vector<std::string> v{"t1", "t3"};
    return v;
}

std::vector<std::string> cfg_vars(int k) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) v.push_back("t" + std::to_string(i));
    return v;
}

Laurent t13_monomial(std::int64_t e1, std::int64_t e3, Rational coeff) {
    return Laurent::monomial(coeff_vars(), {e1, e3}, std::move(coeff));
}

Laurent t13_zero() {
    return Laurent(coeff_vars());
}

} // namespace w3calc
