#include <concord/laurent.hpp>

#include <algorithm>

namespace concord {

void LaurentPoly::trim() {
    size_t lead = coeffs_.size();
    while (lead > 0 && coeffs_[lead - 1] == 0) --lead;
    coeffs_.resize(lead);
    size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
    if (skip > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
        low_ += static_cast<long>(skip);
    }
    if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::constant(Rational c) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = 0;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

LaurentPoly LaurentPoly::monomial(Rational c, long exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exponent;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(long low, std::vector<Rational> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

Rational LaurentPoly::coefficient(long exponent) const {
    long i = exponent - low_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational LaurentPoly::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational LaurentPoly::trailing_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    long lo = std::min(low_, rhs.low_);
    long hi = std::max(high_exponent(), rhs.high_exponent());
    std::vector<Rational> out(static_cast<size_t>(hi - lo + 1), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<size_t>(low_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<size_t>(rhs.low_ - lo) + i] += rhs.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = LaurentPoly();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    low_ += rhs.low_;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly();
    LaurentPoly p(*this);
    for (auto& a : p.coeffs_) a *= c;
    return p;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.low_ += k;
    return p;
}

LaurentPoly LaurentPoly::involution() const {
    LaurentPoly p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = coeffs_.empty() ? 0 : -high_exponent();
    return p;
}

LaurentPoly LaurentPoly::derivative() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * Rational(low_ + static_cast<long>(i)));
    return from_coefficients(low_ - 1, std::move(out));
}

LaurentPoly LaurentPoly::shifted_to_ordinary() const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.low_ = 0;
    return p;
}

Rational LaurentPoly::evaluate_shifted(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if (x == 0) {
        if (low_ < 0) throw Error("Laurent evaluation at 0 with negative exponents");
        return low_ > 0 ? Rational(0) : (span() >= 0 ? coefficient(0) : Rational(0));
    }
    Rational shifted = evaluate_shifted(x);
    if (low_ == 0) return shifted;
    Rational p(1);
    long e = low_ > 0 ? low_ : -low_;
    Rational base = low_ > 0 ? x : Rational(1) / x;
    for (long i = 0; i < e; ++i) p *= base;
    return shifted * p;
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
    if (k == 0) throw Error("substitute_power: exponent must be nonzero");
    if (is_zero()) return LaurentPoly();
    LaurentPoly out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += monomial(coeffs_[i], (low_ + static_cast<long>(i)) * k);
    }
    return out;
}

LaurentPoly LaurentPoly::canonical() const {
    if (is_zero()) return LaurentPoly();
    Integer den_lcm(1);
    for (const auto& c : coeffs_) {
        Integer d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Integer> zs;
    zs.reserve(coeffs_.size());
    Integer content(0);
    for (const auto& c : coeffs_) {
        Integer z = c.get_num() * (den_lcm / c.get_den());
        content = gcd(content, z);
        zs.push_back(std::move(z));
    }
    if (zs.back() < 0) content = -content;
    LaurentPoly p;
    p.low_ = 0;
    p.coeffs_.reserve(zs.size());
    for (auto& z : zs) p.coeffs_.emplace_back(Rational(z / content));
    return p;
}

bool associates(const LaurentPoly& a, const LaurentPoly& b) {
    return a.canonical() == b.canonical();
}

DivisionResult divrem_ordinary(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("zero divisor");
    if (a.low_exponent() < 0 || b.low_exponent() < 0)
        throw Error("divrem_ordinary: negative exponent");
    LaurentPoly r = a;
    std::vector<Rational> q(r.is_zero() || r.high_exponent() < b.high_exponent()
                                ? 0
                                : static_cast<size_t>(r.high_exponent() - b.high_exponent() + 1),
                            Rational(0));
    while (!r.is_zero() && r.high_exponent() >= b.high_exponent()) {
        long shift = r.high_exponent() - b.high_exponent();
        Rational c = r.leading_coefficient() / b.leading_coefficient();
        q[static_cast<size_t>(shift)] = c;
        r -= b.shifted(shift).scaled(c);
    }
    return {LaurentPoly::from_coefficients(0, std::move(q)), r};
}

DivisionResult divrem(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("zero divisor");
    return divrem_ordinary(a.shifted_to_ordinary(), b.shifted_to_ordinary());
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return divrem(a, b).remainder.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("zero divisor");
    if (a.is_zero()) return LaurentPoly();
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("exact_div: not divisible");
    // restore the unit dropped by the ordinary shift
    return q.shifted(a.low_exponent() - b.low_exponent());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
    LaurentPoly f = a.canonical();
    LaurentPoly g = b.canonical();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    while (!g.is_zero()) {
        LaurentPoly r = divrem(f, g).remainder;
        f = std::move(g);
        g = r.is_zero() ? LaurentPoly() : r.canonical();
    }
    return f.canonical();
}

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    return exact_div(a * b, gcd(a, b)).canonical();
}

static Rational rational_pow(const Rational& base, long e) {
    Rational p(1);
    for (long i = 0; i < e; ++i) p *= base;
    return p;
}

Rational resultant(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) throw Error("resultant of zero polynomial");
    // res(f, g) = lc(f)^deg g * prod_{f(alpha)=0} g(alpha).  Both arguments
    // start as shifted ordinary polynomials with nonzero constant term.
    LaurentPoly f = a.shifted_to_ordinary();
    LaurentPoly g = b.shifted_to_ordinary();
    Rational acc(1);
    while (true) {
        long m = f.high_exponent();
        long n = g.high_exponent();
        if (n == 0) return acc * rational_pow(g.leading_coefficient(), m);
        LaurentPoly r = divrem_ordinary(f, g).remainder;
        if (r.is_zero()) return Rational(0);
        // res(f,g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r), and a remainder
        // t^j * rhat splits off res(g, t^j) = ((-1)^n g(0))^j.
        long deg_r = r.high_exponent();
        Rational scale = rational_pow(g.leading_coefficient(), m - deg_r);
        if ((m % 2) == 1 && (n % 2) == 1) scale = -scale;
        long j = r.low_exponent();
        if (j > 0) {
            Rational g0 = g.coefficient(0);
            if (n % 2 == 1) g0 = -g0;
            scale *= rational_pow(g0, j);
        }
        acc *= scale;
        f = std::move(g);
        g = r.shifted_to_ordinary();
    }
}

int symmetry_sign(const LaurentPoly& p) {
    if (p.is_zero()) return 1;
    const auto& c = p.coefficients();
    size_t n = c.size();
    bool plus = true, minus = true;
    for (size_t i = 0; i < n; ++i) {
        if (c[i] != c[n - 1 - i]) plus = false;
        if (c[i] != -c[n - 1 - i]) minus = false;
    }
    if (plus) return 1;
    if (minus) return -1;
    return 0;
}

bool is_symmetric(const LaurentPoly& p) { return symmetry_sign(p) != 0; }

std::strong_ordering compare(const LaurentPoly& a, const LaurentPoly& b) {
    if (auto c = a.span() <=> b.span(); c != 0) return c;
    if (auto c = a.low_exponent() <=> b.low_exponent(); c != 0) return c;
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (size_t i = 0; i < ca.size(); ++i) {
        int c = cmp(ca[i], cb[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace concord
