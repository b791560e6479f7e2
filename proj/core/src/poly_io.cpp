#include <concord/poly_io.hpp>

#include <cctype>

namespace concord {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    // Consumes '+'/'-' (also the UTF-8 minus sign), returns the sign.
    int take_sign() {
        skip_ws();
        if (i < s.size() && s[i] == '+') {
            ++i;
            return 1;
        }
        if (i < s.size() && s[i] == '-') {
            ++i;
            return -1;
        }
        if (i < s.size() && s.compare(i, 3, "\xe2\x88\x92") == 0) {
            i += 3;
            return -1;
        }
        return 0;
    }
    Integer take_uint(const char* what) {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError(std::string("expected ") + what, start);
        return Integer(s.substr(start, i - start));
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
    Cursor c{text};
    if (c.done()) throw ParseError("empty polynomial", 0);
    LaurentPoly result;
    bool first = true;
    while (!c.done()) {
        int sign = c.take_sign();
        if (sign == 0) {
            if (!first) throw ParseError("expected '+' or '-'", c.i);
            sign = 1;
        } else if (sign != 0 && c.done()) {
            throw ParseError("dangling sign", c.i);
        }
        // optional rational coefficient
        Rational coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Integer num = c.take_uint("numerator");
            Integer den(1);
            if (c.peek() == '/') {
                ++c.i;
                den = c.take_uint("denominator");
                if (den == 0) throw ParseError("zero denominator", c.i);
            }
            coeff = make_rational(num, den);
            saw_coeff = true;
        }
        // optional t part
        long exponent = 0;
        bool saw_t = false;
        if (c.peek() == '*') {
            ++c.i;
            if (c.peek() != 't') throw ParseError("expected 't' after '*'", c.i);
        }
        if (c.peek() == 't') {
            ++c.i;
            saw_t = true;
            exponent = 1;
            if (c.peek() == '^') {
                ++c.i;
                c.skip_ws();
                int esign = 1;
                if (c.peek() == '-') {
                    esign = -1;
                    ++c.i;
                } else if (c.peek() == '+') {
                    ++c.i;
                }
                Integer e = c.take_uint("exponent");
                if (!e.fits_slong_p()) throw ParseError("exponent out of range", c.i);
                exponent = esign * e.get_si();
            }
        }
        if (!saw_coeff && !saw_t) throw ParseError("expected term", c.i);
        if (sign < 0) coeff = -coeff;
        result += LaurentPoly::monomial(coeff, exponent);
        first = false;
    }
    return result;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // highest exponent first
    const auto& coeffs = p.coefficients();
    for (size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c == 0) continue;
        long e = p.low_exponent() + static_cast<long>(k);
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit_coeff = (mag == 1);
        if (e == 0) {
            out += mag.get_str();
        } else {
            if (!unit_coeff) {
                out += mag.get_str();
                out += "*";
            }
            out += "t";
            if (e != 1) {
                out += "^";
                out += std::to_string(e);
            }
        }
    }
    return out;
}

}  // namespace concord
