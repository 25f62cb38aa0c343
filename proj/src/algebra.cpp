#include "ncgb/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace ncgb {

Polynomial::Polynomial(Ordering ord, std::vector<Term> terms) : ord_(std::move(ord)), terms_(std::move(terms)) {
    normalize();
}

Polynomial Polynomial::from_sorted(Ordering ord, std::vector<Term> terms) {
    Polynomial p(std::move(ord));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(Ordering ord, const Rational& c) { return monomial(std::move(ord), c, Word{}); }

Polynomial Polynomial::monomial(Ordering ord, const Rational& c, Word w) {
    std::vector<Term> t;
    if (c != 0) t.push_back(Term{c, std::move(w)});
    Polynomial p(std::move(ord));
    p.terms_ = std::move(t);
    return p;
}

void Polynomial::normalize() {
    const std::size_t n = ord_.nvars();
    for (const auto& t : terms_)
        for (Letter l : t.mon)
            if (l >= n) throw ArgumentError("letter outside the alphabet");
    std::stable_sort(terms_.begin(), terms_.end(),
                     [this](const Term& a, const Term& b) { return ord_.greater(a.mon, b.mon); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        Rational c = terms_[i].coeff;
        while (j < terms_.size() && terms_[j].mon == terms_[i].mon) c += terms_[j++].coeff;
        if (c != 0) out.push_back(Term{std::move(c), std::move(terms_[i].mon)});
        i = j;
    }
    terms_ = std::move(out);
}

const Term& Polynomial::lt() const {
    if (terms_.empty()) throw ArgumentError("lead term of the zero polynomial");
    return terms_.front();
}

const Word& Polynomial::lm() const { return lt().mon; }
const Rational& Polynomial::lc() const { return lt().coeff; }

std::size_t Polynomial::degree() const {
    std::size_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.size());
    return d;
}

Polynomial Polynomial::combine(const Polynomial& b, const Rational& scalar) const {
    if (!ord_.same_as(b.ord_)) throw ArgumentError("polynomials over different orderings or alphabets");
    Polynomial r(ord_);
    if (scalar == 0) {
        r.terms_ = terms_;
        return r;
    }
    auto& out = r.terms_;
    out.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < b.terms_.size()) {
        const Cmp c = ord_.compare(terms_[i].mon, b.terms_[j].mon);
        if (c == Cmp::Greater) {
            out.push_back(terms_[i++]);
        } else if (c == Cmp::Less) {
            out.push_back(Term{scalar * b.terms_[j].coeff, b.terms_[j].mon});
            ++j;
        } else {
            Rational s = terms_[i].coeff + scalar * b.terms_[j].coeff;
            if (s != 0) out.push_back(Term{std::move(s), terms_[i].mon});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(Term{scalar * b.terms_[j].coeff, b.terms_[j].mon});
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ord_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lc());
}

Polynomial Polynomial::reordered(const Ordering& ord) const {
    if (!(*ord.alphabet() == *ord_.alphabet())) throw ArgumentError("reordering across alphabets");
    return Polynomial(ord, terms_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ord_.same_as(o.ord_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mon != o.terms_[i].mon) return false;
    return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, 1); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, -1); }

Polynomial term_mul_poly(const Term& l, const Polynomial& p, const Term& r) {
    const Rational c = l.coeff * r.coeff;
    std::vector<Term> terms;
    if (c == 0) return Polynomial(p.ordering());
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back(Term{c * t.coeff, word_concat(l.mon, t.mon, r.mon)});
    // two-sided multiplication keeps the descending order of an admissible ordering
    if (p.ordering().admissible()) return Polynomial::from_sorted(p.ordering(), std::move(terms));
    return Polynomial(p.ordering(), std::move(terms));
}

Polynomial word_mul_poly(const Word& l, const Polynomial& p, const Word& r) {
    return term_mul_poly(Term{1, l}, p, Term{1, r});
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_word(const Word& w, const Alphabet& a) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += '*';
        s += a.name(w[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const auto& a = *p.ordering().alphabet();
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (t.mon.empty()) {
            s += format_rational(c);
        } else {
            if (c != 1) s += format_rational(c) + "*";
            s += format_word(t.mon, a);
        }
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const Ordering& ord) : s_(text), ord_(ord) {
        const auto& names = ord.alphabet()->names();
        for (Letter i = 0; i < names.size(); ++i) by_length_.emplace_back(names[i], i);
        std::stable_sort(by_length_.begin(), by_length_.end(),
                         [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    }

    Polynomial run() {
        std::vector<Term> terms;
        skip();
        if (at_end()) fail("empty polynomial");
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        for (;;) {
            Term t = term();
            if (neg) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            neg = peek() == '-';
            ++pos_;
        }
        return Polynomial(ord_, std::move(terms));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return s_.substr(start, pos_ - start);
    }

    Term term() {
        skip();
        if (at_end()) fail("expected a term");
        Term t{1, {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num(digits());
            mpz_class den(1);
            skip();
            if (!at_end() && peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                den = mpz_class(digits());
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            t.coeff = Rational(num, den);
            t.coeff.canonicalize();
            skip();
            if (at_end() || peek() != '*') return t;
            ++pos_;
        }
        word(t.mon);
        return t;
    }

    void word(Word& w) {
        for (;;) {
            skip();
            const Letter g = generator();
            std::size_t k = 1;
            skip();
            if (!at_end() && peek() == '^') {
                ++pos_;
                const std::size_t at = pos_;
                const std::string d = digits();
                if (d.size() > 6 || std::stoul(d) == 0) {
                    pos_ = at;
                    fail("bad exponent");
                }
                k = std::stoul(d);
            }
            w.insert(w.end(), k, g);
            skip();
            if (at_end() || peek() != '*') return;
            ++pos_;
        }
    }

    Letter generator() {
        for (const auto& [name, idx] : by_length_)
            if (s_.compare(pos_, name.size(), name) == 0) {
                pos_ += name.size();
                return idx;
            }
        std::size_t end = pos_;
        while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
        if (end == pos_) fail("expected a generator");
        fail("unknown generator '" + s_.substr(pos_, end - pos_) + "'");
    }

    const std::string& s_;
    const Ordering& ord_;
    std::vector<std::pair<std::string, Letter>> by_length_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ordering& ord) { return Parser(text, ord).run(); }

}  // namespace ncgb
