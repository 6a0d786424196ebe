#pragma once

#include "laurent.hpp"

#include <json.hpp>

#include <compare>
#include <map>
#include <string>

namespace w3calc {

// Parity of the ambient dimension n; sign() is (-1)^n.
enum class Parity { even, odd };

inline int parity_sign(Parity p) { return p == Parity::even ? +1 : -1; }
std::string parity_name(Parity p);
Parity parity_parse(const std::string& s);

// Ordered generator index pair, 1-based, i < j in normal form.
struct IndexPair {
    int i = 0;
    int j = 0;
    auto operator<=>(const IndexPair&) const = default;
};

inline const IndexPair P12{1, 2};
inline const IndexPair P13{1, 3};
inline const IndexPair P23{2, 3};

// Element of the degree-(n-1) homotopy of the k-point configuration space,
// rationalized: a sum of terms c(t_i) * w_ij with i < j and the coefficient
// polynomial supported on the variable t_i only (the other deck generators
// act trivially or fold into t_i^(-1)).
class HClass {
public:
    HClass(Parity parity, int k);

    Parity parity() const { return parity_; }
    int k() const { return k_; }
    const std::map<IndexPair, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // coeff must be in normal form: exponents only on variable t_i.
    HClass& add_normal(IndexPair p, const Laurent& coeff);

    bool operator==(const HClass& o) const;
    bool operator!=(const HClass& o) const { return !(*this == o); }

private:
    Parity parity_;
    int k_;
    std::map<IndexPair, Laurent> terms_;
};

// Rewrites coeff * t^exps * w_ij (indices in any order) into normal form:
//   w_ii = 0; w_ji = (-1)^n w_ij; t_l acts trivially for l outside {i,j};
//   t_j folds to t_i^(-1).
HClass normalize(const ExponentVector& exps, const Rational& coeff,
                 int i, int j, Parity parity, int k);

// Group-ring action of a deck monomial t^mono on a class.
HClass act(const ExponentVector& mono, const HClass& c);

// The four boundary inclusions of the 2-point model into the 3-point model.
enum class Face { t1_zero, double_first, double_second, t3_one };

std::string face_name(Face f);

struct FaceMapParams {
    std::int64_t a1 = 0; // velocity degree for double_first
    std::int64_t a2 = 0; // velocity degree for double_second
};

// c must be a 2-point class; the result is a fully normalized 3-point class.
//   t1_zero:       w12 -> w23,                t1 -> t2, t2 -> t3
//   double_first:  w12 -> w13 + w23 + a1*w21, t1 -> t1*t2, t2 -> t3
//   double_second: w12 -> w12 + w13 + a2*w23, t1 -> t1, t2 -> t2*t3
//   t3_one:        identity on generators
HClass face_image(const HClass& c, Face face, FaceMapParams params);

nlohmann::json hclass_to_json(const HClass& c);
HClass hclass_from_json(Parity parity, int k, const nlohmann::json& j);

} // namespace w3calc
