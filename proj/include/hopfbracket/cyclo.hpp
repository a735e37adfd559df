#pragma once

#include <complex>
#include <vector>

#include "hopfbracket/laurent.hpp"

namespace hb {

// Z[x]/Phi_n(x), x the distinguished primitive n-th root of unity e^{2*pi*i/n}.
// coeffs has size phi(n) = deg Phi_n; equality is coefficient equality.
class CycloValue {
public:
    CycloValue() = default;
    CycloValue(int order, std::vector<Int> coeffs);
    static CycloValue zero(int order);
    static CycloValue one(int order);
    static CycloValue root_power(int order, long exp);  // x^exp reduced

    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_integer(Int* out = nullptr) const;

    CycloValue operator-() const;
    CycloValue operator+(const CycloValue& o) const;
    CycloValue operator-(const CycloValue& o) const;
    CycloValue operator*(const CycloValue& o) const;
    bool operator==(const CycloValue& o) const;
    bool operator!=(const CycloValue& o) const { return !(*this == o); }
    bool operator<(const CycloValue& o) const;  // lexicographic, for sets

    CycloValue conj() const;          // x -> x^(n-1)
    CycloValue abs_squared() const;   // v * conj(v)
    CycloValue pow(unsigned e) const;

    std::complex<double> to_complex() const;

    std::string str() const;

private:
    int order_ = 1;
    std::vector<Int> coeffs_;  // size phi(order)
};

// Phi_n as a dense coefficient vector (degree phi(n)), cached per order
const std::vector<Int>& cyclotomic_poly(int n);
int euler_phi(int n);

// p(A) with A = the distinguished primitive n-th root of unity, exactly
CycloValue lp_eval_cyclo(const LaurentPoly& p, int n);

// float evaluation of p at e^{2*pi*i/n} (comparison/ordering only)
std::complex<double> lp_eval_complex(const LaurentPoly& p, int n);

}  // namespace hb
