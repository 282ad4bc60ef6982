#include "orbitdx/scalar.hpp"

#include <cctype>

namespace orbitdx {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0)
        throw DivisionByZeroError("rational denominator is zero");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

GaussianRational GaussianRational::inv() const {
    if (is_zero())
        throw DivisionByZeroError("division by zero in Q(i)");
    Rational n = norm2();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::str() const {
    if (is_real())
        return rational_str(re_);
    if (sgn(re_) == 0)
        return rational_str(im_) + "*i";
    std::string s = rational_str(re_);
    if (sgn(im_) < 0)
        return s + "-" + rational_str(-im_) + "*i";
    return s + "+" + rational_str(im_) + "*i";
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool try_consume(char c) {
        if (!at_end() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad scalar \"" + std::string(text) + "\": " + why);
    }

    mpz_class digits() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected digits");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // One signless unit: either a bare "i" or "n", "n/d", "n*i", "n/d*i".
    // Returns (value, is_imaginary).
    std::pair<Rational, bool> unit() {
        if (try_consume('i'))
            return {Rational(1), true};
        mpz_class num = digits();
        mpz_class den = 1;
        skip_ws();
        if (try_consume('/')) {
            skip_ws();
            den = digits();
            if (sgn(den) == 0)
                fail("zero denominator");
            skip_ws();
        }
        bool imag = false;
        if (try_consume('*')) {
            skip_ws();
            if (!try_consume('i'))
                fail("expected i after *");
            imag = true;
        }
        return {make_rational(num, den), imag};
    }

    std::pair<Rational, bool> signed_unit() {
        bool neg = false;
        if (try_consume('-'))
            neg = true;
        else
            try_consume('+');
        skip_ws();
        auto [v, imag] = unit();
        return {neg ? Rational(-v) : v, imag};
    }
};

} // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.at_end())
        c.fail("empty");
    auto [v1, imag1] = c.signed_unit();
    c.skip_ws();
    if (c.at_end())
        return imag1 ? GaussianRational(Rational(0), v1) : GaussianRational(v1);

    bool neg = false;
    if (c.try_consume('-'))
        neg = true;
    else if (!c.try_consume('+'))
        c.fail("expected + or - between parts");
    c.skip_ws();
    auto [v2, imag2] = c.unit();
    if (neg)
        v2 = -v2;
    c.skip_ws();
    if (!c.at_end())
        c.fail("trailing characters");
    if (imag1 == imag2)
        c.fail(imag1 ? "two imaginary parts" : "two real parts");
    if (imag1)
        return {v2, v1};
    return {v1, v2};
}

} // namespace orbitdx
