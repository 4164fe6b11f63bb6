#pragma once

// Shared recursive-descent reader for scalar, form and structure-equation text.

#include <map>
#include <string>

#include "g2forge/errors.hpp"
#include "g2forge/forms.hpp"
#include "g2forge/scalar.hpp"

namespace g2forge::detail {

struct ParsedExpr {
    std::map<Mask, QuadScalar> terms;  // zero coefficients dropped
    int degree = -1;                   // -1 when no monomial seen
};

class TextParser {
public:
    TextParser(const std::string& text, int dim) : s_(text), dim_(dim) {}

    ParsedExpr expression();
    void expect(char c);
    bool accept(char c);
    void skip_ws();
    bool at_end();
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

private:
    struct Term {
        QuadScalar coeff = 1;
        bool has_mono = false;
        Mask mono = 0;
    };
    Term term();
    void factor(Term& t);
    mpz_class integer();

    const std::string& s_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace g2forge::detail
