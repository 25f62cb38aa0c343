#include "ncgb/orderings.hpp"

#include "ncgb/algebra.hpp"

#include <random>
#include <sstream>

namespace ncgb {

const char* order_name(OrderKind k) {
    switch (k) {
        case OrderKind::DegLex: return "deglex";
        case OrderKind::DegInvLex: return "deginvlex";
        case OrderKind::DegRevLex: return "degrevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::InvLex: return "invlex";
    }
    return "?";
}

std::optional<OrderKind> parse_order_name(const std::string& s) {
    if (s == "deglex") return OrderKind::DegLex;
    if (s == "deginvlex") return OrderKind::DegInvLex;
    if (s == "degrevlex") return OrderKind::DegRevLex;
    if (s == "lex") return OrderKind::Lex;
    if (s == "invlex") return OrderKind::InvLex;
    return std::nullopt;
}

Ordering::Ordering(OrderKind kind, AlphabetPtr alphabet, bool allow_unsafe)
    : kind_(kind), alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw ArgumentError("ordering needs an alphabet");
    if (!admissible() && !allow_unsafe)
        throw ArgumentError(std::string(order_name(kind)) + " is not admissible");
}

bool Ordering::admissible() const {
    return kind_ == OrderKind::DegLex || kind_ == OrderKind::DegInvLex || kind_ == OrderKind::DegRevLex;
}

bool Ordering::same_as(const Ordering& o) const {
    return kind_ == o.kind_ && (alphabet_ == o.alphabet_ || *alphabet_ == *o.alphabet_);
}

// Smaller letter index means a greater variable.
Cmp Ordering::compare(const Word& a, const Word& b) const {
    const std::size_t na = a.size(), nb = b.size();
    switch (kind_) {
        case OrderKind::DegLex:
        case OrderKind::DegInvLex: {
            if (na != nb) return na < nb ? Cmp::Less : Cmp::Greater;
            for (std::size_t i = 0; i < na; ++i) {
                if (a[i] == b[i]) continue;
                bool a_greater = a[i] < b[i];
                if (kind_ == OrderKind::DegInvLex) a_greater = !a_greater;
                return a_greater ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        }
        case OrderKind::DegRevLex: {
            if (na != nb) return na < nb ? Cmp::Less : Cmp::Greater;
            for (std::size_t i = na; i-- > 0;) {
                if (a[i] == b[i]) continue;
                return a[i] < b[i] ? Cmp::Less : Cmp::Greater;
            }
            return Cmp::Equal;
        }
        case OrderKind::Lex:
        case OrderKind::InvLex: {
            const bool inv = kind_ == OrderKind::InvLex;
            const std::size_t n = std::min(na, nb);
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] == b[i]) continue;
                bool a_greater = a[i] < b[i];
                if (inv) a_greater = !a_greater;
                return a_greater ? Cmp::Greater : Cmp::Less;
            }
            if (na == nb) return Cmp::Equal;
            // the padding symbol sits below every letter in Lex, above in InvLex
            bool a_greater = na > nb;
            if (inv) a_greater = !a_greater;
            return a_greater ? Cmp::Greater : Cmp::Less;
        }
    }
    return Cmp::Equal;
}

long valuing(const Word& m, std::size_t i, std::size_t nvars) {
    if (i < 1 || i > m.size()) return static_cast<long>(nvars) + 1;
    return static_cast<long>(m[i - 1]) + 1;
}

long OrderingFunction::evaluate(const Word& m, std::size_t nvars) const {
    const long n1 = static_cast<long>(nvars) + 1;
    switch (kind) {
        case Kind::Degree: return static_cast<long>(m.size());
        case Kind::Valuing: return valuing(m, index, nvars);
        case Kind::ComplementValuing: return n1 - valuing(m, index, nvars);
        case Kind::ReverseValuing: {
            const long pos = static_cast<long>(m.size()) + 2 - static_cast<long>(index);
            if (pos < 1) return n1;
            return valuing(m, static_cast<std::size_t>(pos), nvars);
        }
    }
    return 0;
}

FunctionalDecomposition::FunctionalDecomposition(OrderKind kind) : kind_(kind) {
    if (kind != OrderKind::DegLex && kind != OrderKind::DegInvLex && kind != OrderKind::DegRevLex)
        throw ArgumentError(std::string("no functional decomposition for ") + order_name(kind));
}

OrderingFunction FunctionalDecomposition::function(std::size_t i) const {
    if (i < 1) throw ArgumentError("ordering functions are numbered from 1");
    OrderingFunction f;
    if (i == 1) return f;
    switch (kind_) {
        case OrderKind::DegLex:
            f.kind = OrderingFunction::Kind::ComplementValuing;
            f.index = i - 1;
            break;
        case OrderKind::DegInvLex:
            f.kind = OrderingFunction::Kind::Valuing;
            f.index = i - 1;
            break;
        default:
            f.kind = OrderingFunction::Kind::ReverseValuing;
            f.index = i;
            break;
    }
    return f;
}

Cmp FunctionalDecomposition::compare(const Word& a, const Word& b, std::size_t nvars) const {
    const std::size_t last = std::max(a.size(), b.size()) + 1;
    for (std::size_t i = 1; i <= last; ++i) {
        const auto f = function(i);
        const long ta = f.evaluate(a, nvars), tb = f.evaluate(b, nvars);
        if (ta != tb) return ta < tb ? Cmp::Less : Cmp::Greater;
    }
    return Cmp::Equal;
}

bool harmonious(OrderKind a, OrderKind b) {
    auto deg = [](OrderKind k) {
        return k == OrderKind::DegLex || k == OrderKind::DegInvLex || k == OrderKind::DegRevLex;
    };
    return deg(a) && deg(b);
}

Polynomial initial(const Polynomial& p, const OrderingFunction& theta) {
    if (p.is_zero()) throw ArgumentError("initial of the zero polynomial");
    const std::size_t n = p.ordering().nvars();
    long best = 0;
    bool first = true;
    for (const auto& t : p.terms()) {
        const long v = theta.evaluate(t.mon, n);
        if (first || v > best) best = v;
        first = false;
    }
    std::vector<Term> kept;
    for (const auto& t : p.terms())
        if (theta.evaluate(t.mon, n) == best) kept.push_back(t);
    return Polynomial(p.ordering(), std::move(kept));
}

namespace {

Word random_word(std::mt19937& rng, std::size_t nvars, std::size_t min_deg, std::size_t max_deg) {
    std::uniform_int_distribution<std::size_t> dlen(min_deg, max_deg);
    std::uniform_int_distribution<Letter> dl(0, static_cast<Letter>(nvars - 1));
    Word w(dlen(rng));
    for (auto& l : w) l = dl(rng);
    return w;
}

std::string show(const Word& w, const Alphabet& a) { return format_word(w, a); }

}  // namespace

AdmissibilityReport admissibility_check(const Ordering& o, std::size_t samples, unsigned seed,
                                        std::size_t max_degree) {
    AdmissibilityReport rep;
    std::mt19937 rng(seed);
    const auto& alpha = *o.alphabet();
    const Word one;
    for (std::size_t s = 0; s < samples; ++s) {
        Word m = random_word(rng, o.nvars(), 1, max_degree);
        if (!o.less(one, m)) {
            rep.pass = false;
            rep.witness = "1 is not below " + show(m, alpha);
            return rep;
        }
        Word a = random_word(rng, o.nvars(), 0, max_degree);
        Word b = random_word(rng, o.nvars(), 0, max_degree);
        if (o.compare(a, b) == Cmp::Equal) continue;
        if (o.greater(a, b)) std::swap(a, b);
        Word l = random_word(rng, o.nvars(), 0, max_degree);
        Word r = random_word(rng, o.nvars(), 0, max_degree);
        Word la = word_concat(l, a, r), lb = word_concat(l, b, r);
        if (!o.less(la, lb)) {
            std::ostringstream os;
            os << show(a, alpha) << " < " << show(b, alpha) << " but " << show(la, alpha) << " > "
               << show(lb, alpha);
            rep.pass = false;
            rep.witness = os.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace ncgb
