#include "text_parser.hpp"

#include <cctype>

namespace g2forge::detail {

void TextParser::skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
}

bool TextParser::at_end() {
    skip_ws();
    return pos_ >= s_.size();
}

bool TextParser::accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
        ++pos_;
        return true;
    }
    return false;
}

void TextParser::expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
}

mpz_class TextParser::integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
}

ParsedExpr TextParser::expression() {
    ParsedExpr out;
    bool first = true;
    for (;;) {
        skip_ws();
        int sgn = 1;
        if (accept('+')) {
        } else if (accept('-')) {
            sgn = -1;
        } else if (!first) {
            break;
        }
        std::size_t term_start = pos_;
        Term t = term();
        if (sgn < 0) t.coeff = -t.coeff;
        int deg = t.has_mono ? popcount(t.mono) : 0;
        if (out.degree < 0) {
            out.degree = deg;
        } else if (deg != out.degree) {
            pos_ = term_start;
            fail("mixed degrees in expression");
        }
        Mask key = t.has_mono ? t.mono : 0;
        auto& slot = out.terms[key];
        slot += t.coeff;
        if (slot.is_zero()) out.terms.erase(key);
        first = false;
    }
    if (out.degree < 0) out.degree = 0;
    return out;
}

TextParser::Term TextParser::term() {
    Term t;
    factor(t);
    for (;;) {
        if (accept('*')) {
            factor(t);
        } else if (accept('/')) {
            mpz_class d = integer();
            if (d == 0) fail("division by zero");
            t.coeff *= QuadScalar(mpq_class(1, 1) / mpq_class(d));
        } else {
            break;
        }
    }
    return t;
}

void TextParser::factor(Term& t) {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= QuadScalar(mpq_class(integer()));
        return;
    }
    if (c == '(') {
        ++pos_;
        std::size_t inner = pos_;
        ParsedExpr e = expression();
        if (e.degree > 0) {
            pos_ = inner;
            fail("basis forms are not allowed inside parentheses");
        }
        expect(')');
        auto it = e.terms.find(0);
        t.coeff *= (it == e.terms.end() ? QuadScalar() : it->second);
        return;
    }
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
        pos_ += 5;
        std::size_t arg = pos_;
        mpz_class n = integer();
        expect(')');
        auto r = sqrt_if_exact(QuadScalar(mpq_class(n)));
        if (!r) {
            pos_ = arg;
            fail("radical sqrt(" + n.get_str() + ") lies outside Q(sqrt2, sqrt3)");
        }
        t.coeff *= *r;
        return;
    }
    if (c == 'r') {
        std::size_t at = pos_;
        ++pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            char d = s_[pos_++];
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                pos_ = at;
                fail("unknown radical");
            }
            if (d == '2') t.coeff *= QuadScalar::sqrt2();
            else if (d == '3') t.coeff *= QuadScalar::sqrt3();
            else if (d == '6') t.coeff *= QuadScalar::sqrt6();
            else {
                pos_ = at;
                fail(std::string("radical r") + d + " lies outside Q(sqrt2, sqrt3)");
            }
            return;
        }
        pos_ = at;
        fail("expected r2, r3 or r6");
    }
    if (c == 'e' || c == 'f') {
        std::size_t at = pos_;
        ++pos_;
        if (t.has_mono) fail("two basis monomials in one term");
        std::vector<int> idx;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            int i = s_[pos_] - '0';
            if (i < 1 || i > dim_) fail("index " + std::to_string(i) + " out of range 1.." + std::to_string(dim_));
            idx.push_back(i);
            ++pos_;
        }
        if (idx.empty()) {
            pos_ = at + 1;
            fail("expected basis indices after 'e'");
        }
        Mask m = 0;
        for (int i : idx) {
            if (m & (1u << (i - 1))) {
                pos_ = at;
                fail("repeated index in basis monomial");
            }
            m |= static_cast<Mask>(1u << (i - 1));
        }
        // sign of sorting the written order
        int inv = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (idx[a] > idx[b]) ++inv;
        if (inv % 2) t.coeff = -t.coeff;
        t.has_mono = true;
        t.mono = m;
        return;
    }
    fail(std::string("unexpected character '") + c + "'");
}

}  // namespace g2forge::detail

namespace g2forge {

QuadScalar parse_scalar(const std::string& text) {
    detail::TextParser p(text, 9);
    auto e = p.expression();
    if (!p.at_end()) p.fail("trailing input");
    if (e.degree > 0) throw ParseError(0, "expected a scalar, found a form");
    auto it = e.terms.find(0);
    return it == e.terms.end() ? QuadScalar() : it->second;
}

}  // namespace g2forge
