#pragma once

#include "rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace w3calc {

using ExponentVector = std::vector<std::int64_t>;

// Graded-lexicographic order: total degree first, then lexicographic.
// Fixed once so every serialization of a polynomial is deterministic.
struct GradedLex {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse Laurent polynomial over named variables with exact rational
// coefficients. Stored coefficients are never zero; equality is structural.
class Laurent {
public:
    using TermMap = std::map<ExponentVector, Rational, GradedLex>;

    explicit Laurent(std::vector<std::string> vars);
    static Laurent monomial(std::vector<std::string> vars, ExponentVector exps, Rational coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Accumulate coeff onto the term at exps, pruning a zero result.
    Laurent& add_term(const ExponentVector& exps, const Rational& coeff);

    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_width(const ExponentVector& e) const;
};

Laurent lp_add(const Laurent& a, const Laurent& b);
Laurent lp_sub(const Laurent& a, const Laurent& b);
Laurent lp_neg(const Laurent& a);
Laurent lp_mul(const Laurent& a, const Laurent& b);
Laurent lp_scale(const Laurent& a, const Rational& c);

// Image of one variable under a substitution: a single invertible monomial
// (nonzero coefficient) in the target variable set.
struct MonomialImage {
    ExponentVector exps;
    Rational coeff = 1;
};

// Ring homomorphism determined by per-variable monomial images. Every source
// variable must be assigned; the result lives over target_vars.
Laurent lp_subst(const Laurent& p,
                 const std::vector<std::string>& target_vars,
                 const std::map<std::string, MonomialImage>& images);

// Exact evaluation at nonzero rational points (one value per variable).
Rational lp_eval(const Laurent& p, const std::vector<Rational>& values);

nlohmann::json poly_to_json(const Laurent& p);
Laurent poly_from_json(std::vector<std::string> vars, const nlohmann::json& j);

// The two fixed variable contexts used downstream.
const std::vector<std::string>& coeff_vars();        // {"t1","t3"}
std::vector<std::string> cfg_vars(int k);            // {"t1",...,"tk"}

// Convenience for the two-variable coefficient ring.
Laurent t13_monomial(std::int64_t e1, std::int64_t e3, Rational coeff = 1);
Laurent t13_zero();

} // namespace w3calc
