#include "hopfbracket/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace hb {

namespace {

// dense poly helpers over Int, index = exponent
using Dense = std::vector<Int>;

void dense_trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    dense_trim(r);
    return r;
}

// exact division by a monic divisor
Dense dense_div_monic(Dense num, const Dense& den) {
    dense_trim(num);
    if (num.empty()) return {};
    if (den.empty() || den.back() != 1) throw std::runtime_error("divisor not monic");
    if (num.size() < den.size()) throw std::runtime_error("inexact cyclotomic division");
    Dense q(num.size() - den.size() + 1, Int(0));
    for (int i = int(q.size()) - 1; i >= 0; --i) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw std::runtime_error("inexact cyclotomic division");
    return q;
}

std::map<int, Dense> g_phi_cache;
std::mutex g_phi_mutex;

Dense compute_cyclotomic(int n);

const Dense& phi_of(int n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    auto r = g_phi_cache.emplace(n, Dense{});
    r.first->second = compute_cyclotomic(n);
    return r.first->second;
}

// x^n - 1 = prod_{d | n} Phi_d
Dense compute_cyclotomic(int n) {
    if (n == 1) return Dense{Int(-1), Int(1)};  // x - 1
    Dense num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    Dense den{Int(1)};
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // recursive via cache; lock is already held, use cache map directly
        auto it = g_phi_cache.find(d);
        if (it == g_phi_cache.end()) {
            auto r = g_phi_cache.emplace(d, Dense{});
            r.first->second = compute_cyclotomic(d);
            it = r.first;
        }
        den = dense_mul(den, it->second);
    }
    return dense_div_monic(std::move(num), den);
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(int n) { return phi_of(n); }

int euler_phi(int n) { return int(phi_of(n).size()) - 1; }

CycloValue::CycloValue(int order, std::vector<Int> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    size_t deg = size_t(euler_phi(order));
    if (coeffs_.size() != deg) throw std::runtime_error("cyclotomic coefficient size mismatch");
}

CycloValue CycloValue::zero(int order) {
    return CycloValue(order, std::vector<Int>(euler_phi(order), Int(0)));
}

CycloValue CycloValue::one(int order) {
    auto v = std::vector<Int>(euler_phi(order), Int(0));
    if (v.empty()) throw std::runtime_error("bad cyclotomic order");
    v[0] = 1;
    return CycloValue(order, std::move(v));
}

CycloValue CycloValue::root_power(int order, long exp) {
    long m = ((exp % order) + order) % order;
    // reduce x^m mod Phi_order
    const Dense& phi = phi_of(order);
    int deg = int(phi.size()) - 1;
    Dense p(size_t(m) + 1, Int(0));
    p[size_t(m)] = 1;
    for (int i = int(p.size()) - 1; i >= deg; --i) {
        if (p[i] == 0) continue;
        Int c = p[i];
        for (int j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
    }
    p.resize(size_t(deg), Int(0));
    return CycloValue(order, std::move(p));
}

bool CycloValue::is_zero() const {
    for (auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloValue::is_integer(Int* out) const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    if (out) *out = coeffs_.empty() ? Int(0) : coeffs_[0];
    return true;
}

CycloValue CycloValue::operator-() const {
    auto v = coeffs_;
    for (auto& c : v) c = -c;
    return CycloValue(order_, std::move(v));
}

CycloValue CycloValue::operator+(const CycloValue& o) const {
    if (order_ != o.order_) throw std::runtime_error("cyclotomic order mismatch");
    auto v = coeffs_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.coeffs_[i];
    return CycloValue(order_, std::move(v));
}

CycloValue CycloValue::operator-(const CycloValue& o) const { return *this + (-o); }

CycloValue CycloValue::operator*(const CycloValue& o) const {
    if (order_ != o.order_) throw std::runtime_error("cyclotomic order mismatch");
    const Dense& phi = phi_of(order_);
    int deg = int(phi.size()) - 1;
    if (is_zero() || o.is_zero()) return zero(order_);
    Dense prod(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    for (int i = int(prod.size()) - 1; i >= deg; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (int j = 0; j <= deg; ++j) prod[i - deg + j] -= c * phi[j];
    }
    prod.resize(size_t(deg), Int(0));
    return CycloValue(order_, std::move(prod));
}

bool CycloValue::operator==(const CycloValue& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool CycloValue::operator<(const CycloValue& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    return coeffs_ < o.coeffs_;
}

CycloValue CycloValue::conj() const {
    CycloValue r = zero(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        CycloValue m = root_power(order_, -long(i));
        for (size_t j = 0; j < m.coeffs_.size(); ++j) r.coeffs_[j] += coeffs_[i] * m.coeffs_[j];
    }
    return r;
}

CycloValue CycloValue::abs_squared() const { return *this * conj(); }

CycloValue CycloValue::pow(unsigned e) const {
    CycloValue r = one(order_);
    CycloValue b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::complex<double> CycloValue::to_complex() const {
    std::complex<double> r = 0;
    double theta = 2.0 * std::numbers::pi / order_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double c = coeffs_[i].convert_to<double>();
        r += c * std::polar(1.0, theta * double(i));
    }
    return r;
}

std::string CycloValue::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].str();
    }
    os << "]@" << order_;
    return os.str();
}

CycloValue lp_eval_cyclo(const LaurentPoly& p, int n) {
    if (n < 1) throw std::runtime_error("cyclotomic order must be >= 1");
    CycloValue r = CycloValue::zero(n);
    for (auto& [e, c] : p.terms()) {
        CycloValue m = CycloValue::root_power(n, e);
        std::vector<Int> v = r.coeffs();
        for (size_t j = 0; j < v.size(); ++j) v[j] += c * m.coeffs()[j];
        r = CycloValue(n, std::move(v));
    }
    return r;
}

std::complex<double> lp_eval_complex(const LaurentPoly& p, int n) {
    std::complex<double> r = 0;
    double theta = 2.0 * std::numbers::pi / n;
    for (auto& [e, c] : p.terms()) r += c.convert_to<double>() * std::polar(1.0, theta * double(e));
    return r;
}

}  // namespace hb
