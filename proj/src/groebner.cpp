#include "ncgb/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace ncgb {

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& P) {
    for (const auto& q : P)
        if (q.is_zero()) throw ArgumentError("division by the zero polynomial");
    const Ordering& ord = p.ordering();
    DivisionResult res{Polynomial(ord), {}, 0};
    std::vector<Term> rem;
    Polynomial cur = p;
    while (!cur.is_zero()) {
        const Word& u = cur.lm();
        bool found = false;
        for (std::size_t j = 0; j < P.size() && !found; ++j) {
            const Word& lmj = P[j].lm();
            if (lmj.size() > u.size()) continue;
            auto it = std::search(u.begin(), u.end(), lmj.begin(), lmj.end());
            if (it == u.end() && !lmj.empty()) continue;
            found = true;
            const auto at = static_cast<std::size_t>(it - u.begin());
            Word ul(u.begin(), it), ur(u.begin() + static_cast<std::ptrdiff_t>(at + lmj.size()), u.end());
            const Rational c = cur.lc() / P[j].lc();
            res.log.add_entry(c, ul, j, ur);
            cur = cur.combine(term_mul_poly(Term{c, ul}, P[j], Term{1, ur}), -1);
            ++res.steps;
        }
        if (!found) {
            rem.push_back(cur.lt());
            cur = Polynomial::from_sorted(ord, std::vector<Term>(cur.terms().begin() + 1, cur.terms().end()));
        }
    }
    res.remainder = Polynomial::from_sorted(ord, std::move(rem));
    return res;
}

std::size_t sugar_value(const OverlapSpec& spec, std::size_t sugar_i, std::size_t sugar_j) {
    return std::max(spec.l1.size() + sugar_i + spec.r1.size(), spec.l2.size() + sugar_j + spec.r2.size());
}

namespace {

struct Pending {
    OverlapSpec spec;
    std::size_t sugar = 0;
};

struct PendingOrder {
    const Ordering* ord;
    bool use_sugar;

    bool operator()(const Pending& a, const Pending& b) const {
        if (use_sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
        Cmp c = ord->compare(a.spec.word, b.spec.word);
        if (c != Cmp::Equal) return c == Cmp::Less;
        if (a.spec.i != b.spec.i) return a.spec.i < b.spec.i;
        if (a.spec.j != b.spec.j) return a.spec.j < b.spec.j;
        c = ord->compare(a.spec.l1, b.spec.l1);
        if (c != Cmp::Equal) return c == Cmp::Less;
        return ord->less(a.spec.l2, b.spec.l2);
    }
};

std::size_t total_degree(const Polynomial& p) { return p.degree(); }

}  // namespace

GroebnerResult mora(const std::vector<Polynomial>& F, const GroebnerOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (F.empty()) throw ArgumentError("empty input basis");
    const Ordering& ord = F.front().ordering();
    if (!ord.admissible()) throw ArgumentError("basis algorithms need an admissible ordering");
    for (const auto& f : F) {
        if (f.is_zero()) throw ArgumentError("zero polynomial in the input basis");
        if (!f.ordering().same_as(ord)) throw ArgumentError("input basis mixes orderings");
    }

    GroebnerResult res;
    auto& G = res.basis;
    G = F;
    std::vector<std::size_t> sugar;
    for (const auto& f : F) sugar.push_back(total_degree(f));
    if (opts.logging)
        for (std::size_t k = 0; k < F.size(); ++k) res.logs.push_back(LoggedRepresentation::unit(k));

    std::multiset<Pending, PendingOrder> queue(PendingOrder{&ord, opts.strategy == Strategy::Sugar});
    auto enqueue = [&](std::size_t i, std::size_t j) {
        // a constant divides everything, so it has nothing to overlap with
        if (G[i].lm().empty() || G[j].lm().empty()) return;
        for (auto& o : enumerate_overlaps(G[i].lm(), G[j].lm(), i == j)) {
            o.i = i;
            o.j = j;
            const std::size_t s = sugar_value(o, sugar[i], sugar[j]);
            queue.insert(Pending{std::move(o), s});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i <= j; ++i) enqueue(i, j);

    SettledSet settled;
    std::size_t iterations = 0;
    while (!queue.empty()) {
        if (iterations >= opts.limits.max_iterations) {
            res.status = RunStatus::IterationCapHit;
            break;
        }
        ++iterations;
        Pending cur = *queue.begin();
        queue.erase(queue.begin());
        const auto& spec = cur.spec;
        ++res.stats.spolys_considered;
        if (opts.criterion2 && criterion2_applies(spec, G, settled)) {
            ++res.stats.criterion_skips;
            continue;
        }
        Polynomial s = s_polynomial(spec, G[spec.i], G[spec.j]);
        DivisionResult d = divide(s, G);
        res.stats.reductions += d.steps;
        settled.insert(settled_key(spec));
        if (d.remainder.is_zero()) {
            ++res.stats.zero_reductions;
            continue;
        }
        if (d.remainder.lm().size() > opts.limits.max_degree) {
            res.status = RunStatus::DegreeCapHit;
            break;
        }
        if (opts.logging) {
            LoggedRepresentation l;
            l.add(res.logs[spec.i], G[spec.j].lc(), spec.l1, spec.r1);
            l.add(res.logs[spec.j], -G[spec.i].lc(), spec.l2, spec.r2);
            l.add(d.log.substitute(res.logs), -1);
            res.logs.push_back(std::move(l));
        }
        G.push_back(std::move(d.remainder));
        sugar.push_back(cur.sugar);
        const std::size_t k = G.size() - 1;
        for (std::size_t i = 0; i <= k; ++i) enqueue(i, k);
    }
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

LoggedBasis reduce_basis_logged(const std::vector<Polynomial>& G, const std::vector<LoggedRepresentation>& logs) {
    const bool logged = !logs.empty();
    if (logged && logs.size() != G.size()) throw ArgumentError("one log per basis element expected");
    std::vector<Polynomial> g;
    std::vector<LoggedRepresentation> lg;
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (G[k].is_zero()) continue;
        const Rational inv = 1 / G[k].lc();
        g.push_back(G[k].scaled(inv));
        if (logged) lg.push_back(logs[k].scaled(inv));
    }
    std::vector<bool> alive(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (j != i && alive[j] && divides(g[j].lm(), g[i].lm())) {
                alive[i] = false;
                break;
            }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (alive[i]) rest.push_back(i);

    LoggedBasis out;
    for (std::size_t pos = 0; pos < rest.size(); ++pos) {
        std::vector<Polynomial> divisors;
        std::vector<LoggedRepresentation> dlogs;
        for (std::size_t q = pos + 1; q < rest.size(); ++q) {
            divisors.push_back(g[rest[q]]);
            if (logged) dlogs.push_back(lg[rest[q]]);
        }
        for (std::size_t q = 0; q < out.basis.size(); ++q) {
            divisors.push_back(out.basis[q]);
            if (logged) dlogs.push_back(out.logs[q]);
        }
        const std::size_t i = rest[pos];
        if (divisors.empty()) {
            out.basis.push_back(g[i]);
            if (logged) out.logs.push_back(lg[i]);
            continue;
        }
        DivisionResult d = divide(g[i], divisors);
        if (logged) {
            LoggedRepresentation l = lg[i];
            l.add(d.log.substitute(dlogs), -1);
            out.logs.push_back(std::move(l));
        }
        out.basis.push_back(std::move(d.remainder));
    }

    std::vector<std::size_t> perm(out.basis.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return out.basis[a].ordering().greater(out.basis[a].lm(), out.basis[b].lm());
    });
    LoggedBasis sorted;
    for (std::size_t k : perm) {
        sorted.basis.push_back(out.basis[k]);
        if (logged) sorted.logs.push_back(out.logs[k]);
    }
    return sorted;
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G) { return reduce_basis_logged(G, {}).basis; }

bool is_groebner_basis(const std::vector<Polynomial>& G) {
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            if (G[i].lm().empty() || G[j].lm().empty()) continue;
            for (auto& o : enumerate_overlaps(G[i].lm(), G[j].lm(), i == j)) {
                o.i = i;
                o.j = j;
                if (!divide(s_polynomial(o, G[i], G[j]), G).remainder.is_zero()) return false;
            }
        }
    return true;
}

void sort_descending(std::vector<Polynomial>& G) {
    std::stable_sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.ordering().greater(a.lm(), b.lm());
    });
}

}  // namespace ncgb
