#include "cpn/rational.hpp"

#include <cctype>

namespace cpn {

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

double rational_to_double(const Rational& q) {
    return q.get_d();
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Replaces U+2212 with '-' and strips whitespace.
std::string normalize_literal(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        if (std::isspace(c)) continue;
        out.push_back(static_cast<char>(c));
    }
    return out;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = normalize_literal(text);
    if (s.empty()) throw ParseError("empty rational literal");
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("malformed rational literal: '" + text + "'");
    auto strip_plus = [](std::string t) {
        if (t[0] == '+') t.erase(0, 1);
        return t;
    };
    const mpz_class zn(strip_plus(num)), zd(strip_plus(den));
    if (zd == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    Rational q(zn, zd);
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n == 0) throw Error("division by zero GaussianRational");
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string imag = rational_to_string(im_ < 0 ? Rational(-im_) : im_) + "*i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
    return rational_to_string(re_) + (im_ < 0 ? "-" : "+") + imag;
}

GaussianRational parse_gaussian_rational(const std::string& text) {
    std::string s = normalize_literal(text);
    if (s.empty()) throw ParseError("empty coefficient literal");

    // Split at the last top-level '+'/'-' that separates the two parts.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') split = i;

    auto parse_imag_token = [&](std::string tok) -> Rational {
        // tok ends in 'i'; accepted shapes: i, -i, c*i, c/d*i
        tok.pop_back();
        if (!tok.empty() && tok.back() == '*') {
            tok.pop_back();
            return parse_rational(tok);
        }
        if (tok.empty() || tok == "+") return Rational(1);
        if (tok == "-") return Rational(-1);
        throw ParseError("malformed imaginary part: '" + text + "'");
    };

    if (s.back() != 'i') {
        if (s.find('i') != std::string::npos || s.find('*') != std::string::npos)
            throw ParseError("malformed coefficient literal: '" + text + "'");
        return GaussianRational(parse_rational(s));
    }

    if (split == std::string::npos)
        return {Rational(0), parse_imag_token(s)};

    std::string real_tok = s.substr(0, split);
    std::string imag_tok = s.substr(split); // keeps the sign
    return {parse_rational(real_tok), parse_imag_token(imag_tok)};
}

} // namespace cpn
