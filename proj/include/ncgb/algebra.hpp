#pragma once

#include "ncgb/orderings.hpp"

namespace ncgb {

struct Term {
    Rational coeff;
    Word mon;
};

class Polynomial {
public:
    explicit Polynomial(Ordering ord) : ord_(std::move(ord)) {}
    Polynomial(Ordering ord, std::vector<Term> terms);

    // terms must already be nonzero and strictly descending
    static Polynomial from_sorted(Ordering ord, std::vector<Term> terms);
    static Polynomial constant(Ordering ord, const Rational& c);
    static Polynomial monomial(Ordering ord, const Rational& c, Word w);

    const Ordering& ordering() const { return ord_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& lt() const;
    const Word& lm() const;
    const Rational& lc() const;
    std::size_t degree() const;

    // a + scalar * b
    Polynomial combine(const Polynomial& b, const Rational& scalar) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial monic() const;
    // same terms under another ordering on the same alphabet
    Polynomial reordered(const Ordering& ord) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void normalize();

    Ordering ord_;
    std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

// l * p * r
Polynomial term_mul_poly(const Term& l, const Polynomial& p, const Term& r);
Polynomial word_mul_poly(const Word& l, const Polynomial& p, const Word& r);

Polynomial parse_polynomial(const std::string& text, const Ordering& ord);
std::string format_word(const Word& w, const Alphabet& a);
std::string format_polynomial(const Polynomial& p);
std::string format_rational(const Rational& q);

}  // namespace ncgb
