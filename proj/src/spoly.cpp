#include "ncgb/spoly.hpp"

namespace ncgb {

std::vector<OverlapSpec> enumerate_overlaps(const Word& u1, const Word& u2, bool same_element) {
    if (u1.empty() || u2.empty()) throw ArgumentError("overlaps need nonempty words");
    std::vector<OverlapSpec> out;
    const long d1 = static_cast<long>(u1.size()), d2 = static_cast<long>(u2.size());
    for (long s = -(d2 - 1); s <= d1 - 1; ++s) {
        if (same_element && s >= 0) break;
        const long lo = std::max(0L, s), hi = std::min(d1, s + d2);
        bool match = true;
        for (long p = lo; p < hi && match; ++p) match = u1[static_cast<std::size_t>(p)] == u2[static_cast<std::size_t>(p - s)];
        if (!match) continue;
        OverlapSpec o;
        o.offset = s;
        if (s < 0) o.l1.assign(u2.begin(), u2.begin() + (-s));
        if (s > 0) o.l2.assign(u1.begin(), u1.begin() + s);
        if (s + d2 > d1) o.r1.assign(u2.begin() + (d1 - s), u2.end());
        if (s + d2 < d1) o.r2.assign(u1.begin() + (s + d2), u1.end());
        if ((s >= 0 && s + d2 <= d1) || (s <= 0 && s + d2 >= d1))
            o.kind = OverlapKind::Subword;
        else if (s < 0)
            o.kind = OverlapKind::Prefix;
        else
            o.kind = OverlapKind::Suffix;
        o.word = word_concat(o.l1, u1, o.r1);
        out.push_back(std::move(o));
    }
    return out;
}

Polynomial s_polynomial(const OverlapSpec& spec, const Polynomial& p1, const Polynomial& p2) {
    if (p1.is_zero() || p2.is_zero()) throw ArgumentError("S-polynomial of a zero polynomial");
    if (word_concat(spec.l1, p1.lm(), spec.r1) != word_concat(spec.l2, p2.lm(), spec.r2))
        throw ArgumentError("overlap placement does not match the lead monomials");
    Polynomial a = term_mul_poly(Term{p2.lc(), spec.l1}, p1, Term{1, spec.r1});
    Polynomial b = term_mul_poly(Term{p1.lc(), spec.l2}, p2, Term{1, spec.r2});
    return a - b;
}

SettledKey placement_key(std::size_t a, long start_a, std::size_t b, long start_b) {
    if (a < b) return {a, b, start_b - start_a};
    if (a > b) return {b, a, start_a - start_b};
    return {a, a, std::labs(start_a - start_b)};
}

SettledKey settled_key(const OverlapSpec& spec) {
    return placement_key(spec.i, static_cast<long>(spec.l1.size()), spec.j, static_cast<long>(spec.l2.size()));
}

bool criterion2_applies(const OverlapSpec& spec, const std::vector<Polynomial>& basis, const SettledSet& settled) {
    if (settled.empty()) return false;
    const Word& w = spec.word;
    struct Placed {
        std::size_t idx;
        long start, len;
    };
    const Placed f{spec.i, static_cast<long>(spec.l1.size()), static_cast<long>(basis.at(spec.i).lm().size())};
    const Placed g{spec.j, static_cast<long>(spec.l2.size()), static_cast<long>(basis.at(spec.j).lm().size())};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].is_zero() || basis[k].lm().empty()) continue;
        const Word& lm = basis[k].lm();
        const long len = static_cast<long>(lm.size());
        for (std::size_t t : occurrences(w, lm)) {
            const long start = static_cast<long>(t);
            if ((k == f.idx && start == f.start) || (k == g.idx && start == g.start)) continue;
            bool ok = true;
            for (const Placed& o : {f, g}) {
                const bool meet = start < o.start + o.len && o.start < start + len;
                if (!meet) continue;
                if (!settled.count(placement_key(k, start, o.idx, o.start))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace ncgb
