#include "hopfbracket/laurent.hpp"

#include <sstream>

namespace hb {

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::delta() {
    LaurentPoly p;
    p.terms_[2] = -1;
    p.terms_[-2] = -1;
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::runtime_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::runtime_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::set(int exp, Int c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
        Int s = coeff(e) + c;
        set(e, s);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) {
        Int s = coeff(e) - c;
        set(e, s);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Int s = r.coeff(e1 + e2) + c1 * c2;
            r.set(e1 + e2, s);
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

void LaurentPoly::shift(const Int& c, int e) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    std::map<int, Int> out;
    for (auto& [ex, co] : terms_) out[ex + e] = co * c;
    terms_ = std::move(out);
}

namespace {

std::string render(const std::map<int, Int>& terms, const char* var) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
        if (first) {
            os << c.str();
            first = false;
        } else {
            if (c >= 0)
                os << "+" << c.str();
            else
                os << "-" << Int(-c).str();
        }
        os << "*" << var << "^" << e;
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::str() const { return render(terms_, "A"); }

TPoly::TPoly(Int constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

TPoly TPoly::monomial(Int coeff, int exp, bool half) {
    TPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    p.half_ = half;
    return p;
}

Int TPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void TPoly::set(int exp, Int c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(c);
}

bool TPoly::operator==(const TPoly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;  // zero: half flag immaterial
    return half_ == o.half_ && terms_ == o.terms_;
}

TPoly TPoly::operator-() const {
    TPoly r;
    r.half_ = half_;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

TPoly TPoly::operator+(const TPoly& o) const {
    if (!is_zero() && !o.is_zero() && half_ != o.half_)
        throw std::runtime_error("adding t-polynomials with mixed sqrt(t) factors");
    TPoly r = *this;
    if (r.is_zero()) r.half_ = o.half_;
    for (auto& [e, c] : o.terms_) {
        Int s = r.coeff(e) + c;
        r.set(e, s);
    }
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
    TPoly r;
    r.half_ = (half_ != o.half_);          // sqrt(t)*sqrt(t) = t
    int carry = (half_ && o.half_) ? 1 : 0;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Int s = r.coeff(e1 + e2 + carry) + c1 * c2;
            r.set(e1 + e2 + carry, s);
        }
    return r;
}

void TPoly::shift(const Int& c, int e) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    std::map<int, Int> out;
    for (auto& [ex, co] : terms_) out[ex + e] = co * c;
    terms_ = std::move(out);
}

Int TPoly::at_one() const {
    Int s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

std::string TPoly::str() const {
    std::string body = render(terms_, "t");
    if (half_ && !terms_.empty()) return "sqrt(t)*(" + body + ")";
    return body;
}

TPoly tpoly_of(const LaurentPoly& p) {
    TPoly r;
    if (p.is_zero()) return r;
    int residue = -1;
    for (auto& [e, c] : p.terms()) {
        int m = ((e % 4) + 4) % 4;
        if (m != 0 && m != 2) throw MixedResidue();
        if (residue == -1) residue = m;
        if (m != residue) throw MixedResidue();
    }
    r.set_half_shift(residue == 2);
    for (auto& [e, c] : p.terms()) {
        // A^e = (sqrt t)*t^((-e-2)/4) when e = 2 mod 4, else t^(-e/4)
        int te = residue == 2 ? (-e - 2) / 4 : -e / 4;
        r.set(te, c);
    }
    return r;
}

LaurentPoly apoly_of(const TPoly& p) {
    LaurentPoly r;
    for (auto& [e, c] : p.terms()) {
        int ae = -4 * e + (p.half_shift() ? -2 : 0);
        r.set(ae, c);
    }
    return r;
}

TPoly tpoly_mod_cyclic(const TPoly& p, int k) {
    if (k < 1) throw std::runtime_error("modulus must be positive");
    TPoly r;
    r.set_half_shift(p.half_shift());
    for (auto& [e, c] : p.terms()) {
        int m = ((e % k) + k) % k;
        Int s = r.coeff(m) + c;
        r.set(m, s);
    }
    return r;
}

TPoly quotient_divisor(int k) {
    // (t^k - 1)/(t + 1) = t^{k-1} - t^{k-2} + ... + t - 1, k even
    if (k < 2 || k % 2 != 0) throw std::runtime_error("quotient divisor needs even k");
    TPoly q;
    for (int i = 0; i < k; ++i) q.set(i, (i % 2 == 0) ? -1 : 1);
    return q;
}

TPoly tpoly_mod_quotient(const TPoly& p, int k) {
    if (k < 4 || k % 2 != 0) throw std::runtime_error("mod-quotient needs even k >= 4");
    TPoly shifted = p;
    shifted.set_half_shift(p.half_shift());
    if (!p.terms().empty()) {
        int lo = p.terms().begin()->first;
        if (lo < 0) {
            int m = (-lo + k - 1) / k;
            shifted.shift(1, m * k);  // t^k = 1 mod (t^k-1)/(t+1)
        }
    }
    TPoly q = quotient_divisor(k);
    // monic division on the plain part; the sqrt(t) flag rides along
    bool half = shifted.half_shift();
    TPoly rem = shifted;
    rem.set_half_shift(false);
    int dq = k - 1;
    while (!rem.terms().empty() && rem.terms().rbegin()->first >= dq) {
        auto lead = *rem.terms().rbegin();
        TPoly sub = q;
        sub.shift(lead.second, lead.first - dq);
        rem = rem - sub;
    }
    rem.set_half_shift(half);
    return rem;
}

TPoly tpoly_exact_div(const TPoly& num, const TPoly& den) {
    if (den.is_zero()) throw InexactDivision("division by zero");
    if (num.is_zero()) return TPoly();
    // divisor must have unit leading coefficient for integral division
    auto lead = *den.terms().rbegin();
    if (lead.second != 1 && lead.second != -1)
        throw InexactDivision("divisor leading coefficient is not a unit");
    // strip sqrt(t) flags, divide plain Laurent polynomials in t
    TPoly rem = num;
    rem.set_half_shift(false);
    TPoly d = den;
    d.set_half_shift(false);
    int floor_exp = num.terms().begin()->first - den.terms().begin()->first;
    TPoly quot;
    while (!rem.is_zero()) {
        auto rl = *rem.terms().rbegin();
        int e = rl.first - lead.first;
        if (e < floor_exp) throw InexactDivision("nonzero remainder");
        Int c = rl.second * lead.second;  // lead is +-1
        Int q = quot.coeff(e) + c;
        quot.set(e, q);
        TPoly sub = d;
        sub.shift(c, e);
        rem = rem - sub;
        if (!rem.is_zero() && rem.terms().rbegin()->first >= rl.first)
            throw InexactDivision("division does not terminate");
    }
    // restore sqrt(t): sqrt^hn / sqrt^hd
    bool hn = num.half_shift(), hd = den.half_shift();
    if (hn != hd) {
        quot.set_half_shift(true);
        if (hd) quot.shift(1, -1);  // 1/sqrt(t) = sqrt(t) * t^-1
    }
    return quot;
}

}  // namespace hb
