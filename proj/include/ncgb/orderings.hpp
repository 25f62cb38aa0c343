#pragma once

#include "ncgb/word.hpp"

#include <optional>
#include <string>

namespace ncgb {

enum class OrderKind { DegLex, DegInvLex, DegRevLex, Lex, InvLex };

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

const char* order_name(OrderKind k);
std::optional<OrderKind> parse_order_name(const std::string& s);

class Ordering {
public:
    // Lex and InvLex are refused unless allow_unsafe is set.
    Ordering(OrderKind kind, AlphabetPtr alphabet, bool allow_unsafe = false);

    OrderKind kind() const { return kind_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t nvars() const { return alphabet_->size(); }
    bool admissible() const;

    Cmp compare(const Word& a, const Word& b) const;
    bool less(const Word& a, const Word& b) const { return compare(a, b) == Cmp::Less; }
    bool greater(const Word& a, const Word& b) const { return compare(a, b) == Cmp::Greater; }

    bool same_as(const Ordering& o) const;

private:
    OrderKind kind_;
    AlphabetPtr alphabet_;
};

// theta_1 = degree; theta_i (i >= 2) derived from the valuing functions.
struct OrderingFunction {
    enum class Kind { Degree, Valuing, ReverseValuing, ComplementValuing };
    Kind kind = Kind::Degree;
    std::size_t index = 0;

    long evaluate(const Word& m, std::size_t nvars) const;
};

// val_i(m): 1-based index of the i-th letter of m, n+1 if there is none.
long valuing(const Word& m, std::size_t i, std::size_t nvars);

class FunctionalDecomposition {
public:
    explicit FunctionalDecomposition(OrderKind kind);

    // i is 1-based
    OrderingFunction function(std::size_t i) const;
    // compare by the first function on which the two words differ
    Cmp compare(const Word& a, const Word& b, std::size_t nvars) const;

private:
    OrderKind kind_;
};

bool harmonious(OrderKind a, OrderKind b);

class Polynomial;

Polynomial initial(const Polynomial& p, const OrderingFunction& theta);

struct AdmissibilityReport {
    bool pass = true;
    std::string witness;
};

AdmissibilityReport admissibility_check(const Ordering& o, std::size_t samples,
                                        unsigned seed = 1, std::size_t max_degree = 4);

}  // namespace ncgb
