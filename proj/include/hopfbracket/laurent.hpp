#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace hb {

using Int = boost::multiprecision::cpp_int;

struct MixedResidue : std::runtime_error {
    MixedResidue() : std::runtime_error("A-exponents mix residues mod 4") {}
};
struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Laurent polynomial in A with exact integer coefficients.
// Invariant: no stored coefficient is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    static LaurentPoly monomial(Int coeff, int exp);

    // A, A^-1, delta = -A^2 - A^-2
    static LaurentPoly a_power(int exp) { return monomial(1, exp); }
    static LaurentPoly delta();

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exp) const;
    int min_exp() const;  // throws on zero
    int max_exp() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    // multiply by c * A^e in place
    void shift(const Int& c, int e);

    std::string str() const;  // "c*A^e" terms, ascending exponent

    void set(int exp, Int c);

private:
    std::map<int, Int> terms_;
};

// Laurent polynomial in t (t = A^-4); half_shift means a global sqrt(t) factor.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(Int constant);
    static TPoly monomial(Int coeff, int exp, bool half = false);

    bool is_zero() const { return terms_.empty(); }
    bool half_shift() const { return half_; }
    void set_half_shift(bool h) { half_ = h; }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exp) const;

    TPoly operator-() const;
    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const;
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    void shift(const Int& c, int e);  // multiply by c * t^e

    // sum of coefficients (value at t = 1, sqrt(t) = 1)
    Int at_one() const;

    std::string str() const;  // "c*t^e" terms, sqrt(t)*(...) prefix if half_shift

    void set(int exp, Int c);

private:
    std::map<int, Int> terms_;
    bool half_ = false;
};

// t-form of an A-polynomial. Requires all exponents = 0 mod 4 (plain) or
// all = 2 mod 4 (a global sqrt(t) factors out). Throws MixedResidue otherwise.
TPoly tpoly_of(const LaurentPoly& p);
LaurentPoly apoly_of(const TPoly& p);

// canonical representative mod t^k - 1: exponents reduced into [0, k)
TPoly tpoly_mod_cyclic(const TPoly& p, int k);

// remainder mod (t^k - 1)/(t + 1), k even >= 4; negative exponents cleared
// with powers of t^k first (t^k = 1 holds modulo the divisor). Result has
// degree < k-1.
TPoly tpoly_mod_quotient(const TPoly& p, int k);

// (t^k - 1)/(t + 1) as a TPoly (exact division; k even)
TPoly quotient_divisor(int k);

// exact division q = num/den in t, throws InexactDivision on remainder
TPoly tpoly_exact_div(const TPoly& num, const TPoly& den);

}  // namespace hb
