#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "avalanche/bigint.hpp"

namespace avalanche {

class Graph;

using Exponents = std::vector<int>;

// Graded lexicographic, highest first (total degree, then lex on exponent
// vectors). Term maps iterate directly in canonical display order.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over the integers: exponent vector (dense,
// one slot per variable) -> nonzero arbitrary-precision coefficient.
// Immutable in spirit: all arithmetic returns new values.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigInt, GrlexDescending>;

    explicit MultiPoly(int n_vars);
    static MultiPoly constant(int n_vars, const BigInt& c);
    static MultiPoly monomial(const Exponents& exp, const BigInt& coef = 1);
    static MultiPoly variable(int n_vars, int index);  // x_index, 0-based

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigInt coefficient(const Exponents& exp) const;
    long total_degree() const;  // -1 for the zero polynomial
    BigInt evaluate_ones() const;
    std::vector<int> support() const;  // variables appearing in some term

    void add_term(const Exponents& exp, const BigInt& coef);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly scaled(const BigInt& k) const;

    bool operator==(const MultiPoly& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }

    // Human form like "2*x1*x2 + x1 + x2 + 2"; var_names overrides the
    // default x1..xn.
    std::string to_string(std::span<const std::string> var_names = {}) const;

    // {"vars": n, "terms": [{"exp": [...], "coef": "<decimal>"}, ...]} in
    // canonical term order; equal polynomials serialize identically.
    nlohmann::ordered_json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

private:
    int n_vars_;
    TermMap terms_;
};

// Dense univariate polynomial, coefficient per degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : BigInt(0); }

    void add_term(std::size_t deg, const BigInt& coef);

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string(const std::string& var = "x") const;
    nlohmann::ordered_json to_json() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Substitute x for every variable; term degrees collapse to total degree.
UniPoly univariate(const MultiPoly& p);

// Substitute x^{weight(v_j, sink)} for x_j (and 1 where v_j is not adjacent
// to the sink); the result counts principal avalanches by burst size.
UniPoly burst_specialize(const MultiPoly& p, const Graph& g);

// Sum over m-subsets A of {1..n} of prod_{i in A} x_i.
MultiPoly elementary_symmetric(int n, int m);

// Sum over i of x_i x_{i+1} ... x_{i+m-1}, indices mod n; for m = n the
// single square-free monomial (coefficient 1, not n).
MultiPoly cyclic_poly(int n, int m);

// Split p into sub-polynomials whose variable supports are the connected
// components of the co-occurrence graph on variables; constant terms form a
// component of their own.
std::vector<MultiPoly> support_components(const MultiPoly& p);

}  // namespace avalanche
