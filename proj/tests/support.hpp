#pragma once

#include "doctest.h"
#include "ncgb/walk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace testing {

using namespace ncgb;

inline std::vector<Polynomial> polys(const Ordering& o, const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, o));
    return out;
}

inline Polynomial poly(const Ordering& o, const std::string& text) { return parse_polynomial(text, o); }

// letters of a word written as single-character names, e.g. "xyz" over {x,y,z}
inline Word w(const std::string& s, const std::string& letters = "xyz") {
    Word out;
    for (char c : s) out.push_back(static_cast<Letter>(letters.find(c)));
    return out;
}

inline std::set<std::string> monic_set(const std::vector<Polynomial>& G) {
    std::set<std::string> out;
    for (const auto& g : G) out.insert(format_polynomial(g.monic()));
    return out;
}

inline std::set<std::string> monic_set(const Ordering& o, const std::vector<std::string>& texts) {
    return monic_set(polys(o, texts));
}

inline std::set<Word> lm_set(const std::vector<Polynomial>& G) {
    std::set<Word> out;
    for (const auto& g : G) out.insert(g.lm());
    return out;
}

// Ordering oracle: a sort key compared lexicographically.
inline Cmp naive_compare(OrderKind k, const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? Cmp::Less : Cmp::Greater;
    std::vector<long> ka, kb;
    switch (k) {
        case OrderKind::DegLex:
            for (Letter x : a) ka.push_back(-static_cast<long>(x));
            for (Letter x : b) kb.push_back(-static_cast<long>(x));
            break;
        case OrderKind::DegInvLex:
            for (Letter x : a) ka.push_back(x);
            for (Letter x : b) kb.push_back(x);
            break;
        case OrderKind::DegRevLex:
            for (auto it = a.rbegin(); it != a.rend(); ++it) ka.push_back(*it);
            for (auto it = b.rbegin(); it != b.rend(); ++it) kb.push_back(*it);
            break;
        default:
            throw std::logic_error("oracle covers the graded orderings only");
    }
    if (ka == kb) return Cmp::Equal;
    return ka < kb ? Cmp::Less : Cmp::Greater;
}

// Multiplication oracle: accumulate into a map, then sort with the oracle comparator.
inline std::vector<Term> naive_mul(const Term& l, const Polynomial& p, const Term& r) {
    std::map<Word, Rational> acc;
    for (const auto& t : p.terms()) acc[word_concat(l.mon, t.mon, r.mon)] += l.coeff * t.coeff * r.coeff;
    std::vector<Term> out;
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back(Term{c, m});
    const OrderKind k = p.ordering().kind();
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return naive_compare(k, a.mon, b.mon) == Cmp::Greater; });
    return out;
}

inline bool same_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].coeff != b[k].coeff || a[k].mon != b[k].mon) return false;
    return true;
}

// Overlap oracle: slide u2 across u1 and keep consistent placements.
using Placement4 = std::tuple<Word, Word, Word, Word>;

inline std::set<Placement4> brute_overlaps(const Word& u1, const Word& u2, bool same) {
    std::set<Placement4> out;
    const long d1 = static_cast<long>(u1.size()), d2 = static_cast<long>(u2.size());
    for (long s = -(d2 - 1); s <= d1 - 1; ++s) {
        if (same && s == 0) continue;
        const long lo = std::min(0L, s), hi = std::max(d1, s + d2);
        Word word(static_cast<std::size_t>(hi - lo), 0);
        std::vector<bool> set(word.size(), false);
        bool ok = true;
        for (long k = 0; k < d1; ++k) {
            word[static_cast<std::size_t>(k - lo)] = u1[static_cast<std::size_t>(k)];
            set[static_cast<std::size_t>(k - lo)] = true;
        }
        for (long k = 0; k < d2 && ok; ++k) {
            const auto pos = static_cast<std::size_t>(s + k - lo);
            if (set[pos] && word[pos] != u2[static_cast<std::size_t>(k)]) ok = false;
            word[pos] = u2[static_cast<std::size_t>(k)];
        }
        if (!ok) continue;
        const auto a = static_cast<std::size_t>(-lo), b = static_cast<std::size_t>(s - lo);
        Word l1(word.begin(), word.begin() + static_cast<long>(a)), r1(word.begin() + static_cast<long>(a) + d1, word.end());
        Word l2(word.begin(), word.begin() + static_cast<long>(b)), r2(word.begin() + static_cast<long>(b) + d2, word.end());
        if (same && out.count({l2, r2, l1, r1})) continue;
        out.insert({l1, r1, l2, r2});
    }
    return out;
}

// Involutive divisor oracle: every admitted start position, straight from the definitions.
inline std::vector<std::size_t> naive_inv_placements(const Word& u2, const Word& u1, const std::vector<bool>& L,
                                                      const std::vector<bool>& R, DivisorMode mode) {
    std::vector<std::size_t> out;
    if (u2.size() > u1.size()) return out;
    for (std::size_t s = 0; s + u2.size() <= u1.size(); ++s) {
        if (!std::equal(u2.begin(), u2.end(), u1.begin() + static_cast<long>(s))) continue;
        const Word u3(u1.begin(), u1.begin() + static_cast<long>(s));
        const Word u4(u1.begin() + static_cast<long>(s + u2.size()), u1.end());
        bool ok = true;
        if (mode == DivisorMode::Thin) {
            if (!u3.empty() && !L[u3.back()]) ok = false;
            if (!u4.empty() && !R[u4.front()]) ok = false;
        } else {
            for (Letter x : u3) ok = ok && L[x];
            for (Letter x : u4) ok = ok && R[x];
        }
        if (ok) out.push_back(s);
    }
    return out;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen); }

    Word word(std::size_t nvars, std::size_t min_deg, std::size_t max_deg) {
        const std::size_t d = min_deg + below(max_deg - min_deg + 1);
        Word out;
        for (std::size_t k = 0; k < d; ++k) out.push_back(static_cast<Letter>(below(nvars)));
        return out;
    }

    Rational coeff() {
        long num = static_cast<long>(below(19)) - 9;
        if (num == 0) num = 1;
        const long den = 1 + static_cast<long>(below(4));
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Polynomial polynomial(const Ordering& o, std::size_t max_terms, std::size_t max_deg) {
        std::vector<Term> ts;
        const std::size_t n = 1 + below(max_terms);
        for (std::size_t k = 0; k < n; ++k) ts.push_back(Term{coeff(), word(o.nvars(), 0, max_deg)});
        return Polynomial(o, ts);
    }
};

}  // namespace testing

namespace doctest {

template <>
struct StringMaker<ncgb::Polynomial> {
    static String convert(const ncgb::Polynomial& p) { return ncgb::format_polynomial(p).c_str(); }
};

template <>
struct StringMaker<std::vector<ncgb::Polynomial>> {
    static String convert(const std::vector<ncgb::Polynomial>& G) {
        std::string out = "{";
        for (std::size_t k = 0; k < G.size(); ++k) out += (k ? ", " : "") + ncgb::format_polynomial(G[k]);
        return (out + "}").c_str();
    }
};

}  // namespace doctest
