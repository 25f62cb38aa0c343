#include "ncgb/involutive.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace ncgb {

std::optional<DivisionKind> division_from_key(int key) {
    if (key < 1 || key > 12) return std::nullopt;
    return static_cast<DivisionKind>(key);
}

int division_key(DivisionKind d) { return static_cast<int>(d); }

const char* division_name(DivisionKind d) {
    switch (d) {
        case DivisionKind::Left: return "left";
        case DivisionKind::Right: return "right";
        case DivisionKind::LeftOverlap: return "left overlap";
        case DivisionKind::StrongLeftOverlap: return "strong left overlap";
        case DivisionKind::TwoSidedLeftOverlap: return "two-sided left overlap";
        case DivisionKind::PrefixOnlyLeftOverlap: return "prefix-only left overlap";
        case DivisionKind::SubwordFreeLeftOverlap: return "subword-free left overlap";
        case DivisionKind::RightOverlap: return "right overlap";
        case DivisionKind::StrongRightOverlap: return "strong right overlap";
        case DivisionKind::TwoSidedRightOverlap: return "two-sided right overlap";
        case DivisionKind::SuffixOnlyRightOverlap: return "suffix-only right overlap";
        case DivisionKind::SubwordFreeRightOverlap: return "subword-free right overlap";
    }
    return "?";
}

bool is_global(DivisionKind d) { return d == DivisionKind::Left || d == DivisionKind::Right; }

bool is_right_handed(DivisionKind d) { return d == DivisionKind::Right || division_key(d) >= 8; }

DivisionKind left_counterpart(DivisionKind d) {
    switch (d) {
        case DivisionKind::Right: return DivisionKind::Left;
        case DivisionKind::RightOverlap: return DivisionKind::LeftOverlap;
        case DivisionKind::StrongRightOverlap: return DivisionKind::StrongLeftOverlap;
        case DivisionKind::TwoSidedRightOverlap: return DivisionKind::TwoSidedLeftOverlap;
        case DivisionKind::SuffixOnlyRightOverlap: return DivisionKind::PrefixOnlyLeftOverlap;
        case DivisionKind::SubwordFreeRightOverlap: return DivisionKind::SubwordFreeLeftOverlap;
        default: return d;
    }
}

namespace {

// descending DegRevLex, smaller letter index = greater variable
bool drl_greater(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// Tables on words already sorted by DegRevLex, all indices 1-based as in the printed algorithms.
class Table {
public:
    Table(const std::vector<Word>& U, std::size_t n)
        : U_(U), L_(U.size(), std::vector<bool>(n, true)), R_(U.size(), std::vector<bool>(n, true)) {}

    Letter at(std::size_t i, std::size_t k) const { return U_[i - 1][k - 1]; }
    std::size_t deg(std::size_t i) const { return U_[i - 1].size(); }
    const Word& u(std::size_t i) const { return U_[i - 1]; }
    std::size_t m() const { return U_.size(); }

    bool R(std::size_t i, Letter x) const { return R_[i - 1][x]; }
    bool L(std::size_t i, Letter x) const { return L_[i - 1][x]; }
    void clearR(std::size_t i, Letter x) { R_[i - 1][x] = false; }
    void clearL(std::size_t i, Letter x) { L_[i - 1][x] = false; }

    bool pre_eq_suff(std::size_t i, std::size_t j, std::size_t k) const {
        return std::equal(u(i).begin(), u(i).begin() + static_cast<std::ptrdiff_t>(k),
                          u(j).end() - static_cast<std::ptrdiff_t>(k));
    }
    bool sub_eq(std::size_t i, std::size_t k, std::size_t j) const { return occurs_at(u(i), u(j), k - 1); }

    std::vector<std::vector<bool>> L_out() const { return L_; }
    std::vector<std::vector<bool>> R_out() const { return R_; }

private:
    const std::vector<Word>& U_;
    std::vector<std::vector<bool>> L_, R_;
};

enum class SubwordLoop { Full, PrefixOnly, None };

void left_overlap(Table& T, SubwordLoop sub, bool guard_subwords) {
    const std::size_t m = T.m();
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j) {
            const std::size_t a = T.deg(i), b = T.deg(j);
            if (i != j && sub != SubwordLoop::None && a >= b) {
                const std::size_t kmax = sub == SubwordLoop::PrefixOnly ? 1 : a - b;
                for (std::size_t k = 1; k <= kmax && k < a - b + 1; ++k)
                    if (T.sub_eq(i, k, j)) T.clearR(j, T.at(i, k + b));
            }
            if (guard_subwords && i != j && (divides(T.u(j), T.u(i)) || divides(T.u(i), T.u(j)))) continue;
            for (std::size_t k = 1; k + 1 <= b && k < a + 1; ++k) {
                if (T.pre_eq_suff(i, j, k)) T.clearR(j, T.at(i, k + 1));
                if (T.pre_eq_suff(j, i, k)) T.clearR(i, T.at(j, k + 1));
            }
        }
}

void disjoint_cones(Table& T) {
    const std::size_t m = T.m();
    for (std::size_t i = m; i >= 1; --i)
        for (std::size_t j = m; j >= 1; --j) {
            bool found = false;
            for (std::size_t k = 1; k <= T.deg(j) && !found; ++k)
                if (!T.R(i, T.at(j, k))) found = true;
            if (!found) T.clearR(i, T.at(j, 1));
        }
}

void two_sided_left_overlap(Table& T) {
    const std::size_t m = T.m();
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j) {
            const std::size_t a = T.deg(i), b = T.deg(j);
            if (i != j && a >= b) {
                for (std::size_t k = 1; k <= a - b + 1; ++k) {
                    if (!T.sub_eq(i, k, j)) continue;
                    if (k < a - b + 1)
                        T.clearR(j, T.at(i, k + b));
                    else if (k > 1)
                        T.clearL(j, T.at(i, k - 1));
                }
            }
            for (std::size_t k = 1; k + 1 <= b && k < a + 1; ++k) {
                if (T.pre_eq_suff(i, j, k)) {
                    const Letter l = T.at(j, b - k), r = T.at(i, k + 1);
                    if (T.L(i, l) && T.R(j, r)) T.clearR(j, r);
                }
                if (T.pre_eq_suff(j, i, k)) {
                    const Letter r = T.at(j, k + 1), l = T.at(i, a - k);
                    if (T.R(i, r) && T.L(j, l)) T.clearL(j, l);
                }
            }
        }
}

MultiplicativeTable left_kind_table(DivisionKind d, const std::vector<Word>& lms, std::size_t n) {
    MultiplicativeTable out;
    const std::size_t m = lms.size();
    if (d == DivisionKind::Left) {
        out.left.assign(m, std::vector<bool>(n, true));
        out.right.assign(m, std::vector<bool>(n, false));
        return out;
    }
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return drl_greater(lms[a], lms[b]); });
    std::vector<Word> U;
    for (std::size_t k : perm) U.push_back(lms[k]);
    Table T(U, n);
    switch (d) {
        case DivisionKind::LeftOverlap: left_overlap(T, SubwordLoop::Full, false); break;
        case DivisionKind::StrongLeftOverlap:
            left_overlap(T, SubwordLoop::Full, false);
            disjoint_cones(T);
            break;
        case DivisionKind::TwoSidedLeftOverlap: two_sided_left_overlap(T); break;
        case DivisionKind::PrefixOnlyLeftOverlap: left_overlap(T, SubwordLoop::PrefixOnly, true); break;
        case DivisionKind::SubwordFreeLeftOverlap: left_overlap(T, SubwordLoop::None, true); break;
        default: throw ArgumentError("not a left-handed division");
    }
    const auto L = T.L_out(), R = T.R_out();
    out.left.assign(m, {});
    out.right.assign(m, {});
    for (std::size_t s = 0; s < m; ++s) {
        out.left[perm[s]] = L[s];
        out.right[perm[s]] = R[s];
    }
    return out;
}

}  // namespace

MultiplicativeTable assign_multiplicative(DivisionKind d, const std::vector<Word>& lms, std::size_t nvars) {
    if (lms.size() == 1 && lms.front().empty()) {
        MultiplicativeTable all;
        all.left.assign(1, std::vector<bool>(nvars, true));
        all.right = all.left;
        return all;
    }
    for (const auto& w : lms) {
        if (w.empty()) throw ArgumentError("the unit monomial only stands alone");
        for (Letter l : w)
            if (l >= nvars) throw ArgumentError("letter outside the alphabet");
    }
    if (!is_right_handed(d)) return left_kind_table(d, lms, nvars);
    std::vector<Word> rev;
    for (const auto& w : lms) rev.push_back(reversed(w));
    MultiplicativeTable t = left_kind_table(left_counterpart(d), rev, nvars);
    std::swap(t.left, t.right);
    return t;
}

namespace {

bool admitted(const Word& u1, std::size_t start, std::size_t len, const std::vector<bool>& L,
              const std::vector<bool>& R, DivisorMode mode) {
    const std::size_t end = start + len;
    if (mode == DivisorMode::Thin) {
        if (start > 0 && !L[u1[start - 1]]) return false;
        if (end < u1.size() && !R[u1[end]]) return false;
        return true;
    }
    for (std::size_t k = 0; k < start; ++k)
        if (!L[u1[k]]) return false;
    for (std::size_t k = end; k < u1.size(); ++k)
        if (!R[u1[k]]) return false;
    return true;
}

std::optional<std::size_t> find_placement(const Word& u2, const Word& u1, const std::vector<bool>& L,
                                          const std::vector<bool>& R, DivisorMode mode, std::size_t from) {
    if (u2.size() > u1.size()) return std::nullopt;
    for (std::size_t s = from; s + u2.size() <= u1.size(); ++s)
        if (occurs_at(u1, u2, s) && admitted(u1, s, u2.size(), L, R, mode)) return s;
    return std::nullopt;
}

Placement split(const Word& u1, std::size_t start, std::size_t len) {
    return Placement{Word(u1.begin(), u1.begin() + static_cast<std::ptrdiff_t>(start)),
                     Word(u1.begin() + static_cast<std::ptrdiff_t>(start + len), u1.end())};
}

}  // namespace

std::optional<Placement> involutively_divides(const Word& u2, const Word& u1, const std::vector<bool>& left_mult,
                                              const std::vector<bool>& right_mult, DivisorMode mode) {
    auto s = find_placement(u2, u1, left_mult, right_mult, mode, 0);
    if (!s) return std::nullopt;
    return split(u1, *s, u2.size());
}

std::optional<Placement> fast_inv_divides_global(const Word& u2, const Word& u1, Side side) {
    if (u2.size() > u1.size()) return std::nullopt;
    const std::size_t start = side == Side::Left ? u1.size() - u2.size() : 0;
    if (!occurs_at(u1, u2, start)) return std::nullopt;
    return split(u1, start, u2.size());
}

std::size_t overlap_skip_offset(const Word& u, const Word& lm, const std::vector<bool>& right_mult) {
    const std::size_t beta = lm.size();
    for (std::size_t k = u.size(); k >= beta + 1; --k)
        if (!right_mult[u[k - 1]]) return k - beta + 1;
    return 1;
}

namespace {

std::optional<std::size_t> placement_for(const Word& lm, const Word& u, const MultiplicativeTable& table,
                                         std::size_t j, DivisionKind d, DivisorMode mode) {
    if (lm.size() > u.size()) return std::nullopt;
    if (d == DivisionKind::Left || d == DivisionKind::Right) {
        const std::size_t start = d == DivisionKind::Left ? u.size() - lm.size() : 0;
        if (occurs_at(u, lm, start)) return start;
        return std::nullopt;
    }
    std::size_t from = 0;
    if (mode == DivisorMode::Thick) from = overlap_skip_offset(u, lm, table.right[j]) - 1;
    return find_placement(lm, u, table.left[j], table.right[j], mode, from);
}

}  // namespace

InvDivResult inv_divide(const Polynomial& p, const std::vector<Polynomial>& P, const MultiplicativeTable& table,
                        DivisionKind d, DivisorMode mode, std::size_t exclude) {
    if (table.size() != P.size()) throw ArgumentError("multiplicative table does not match the basis");
    const Ordering& ord = p.ordering();
    InvDivResult res{Polynomial(ord), {}, 0};
    std::vector<Term> rem;
    Polynomial cur = p;
    while (!cur.is_zero()) {
        const Word& u = cur.lm();
        bool found = false;
        for (std::size_t j = 0; j < P.size() && !found; ++j) {
            if (j == exclude || P[j].is_zero()) continue;
            const Word& lmj = P[j].lm();
            auto s = placement_for(lmj, u, table, j, d, mode);
            if (!s) continue;
            found = true;
            Word ul(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(*s));
            Word ur(u.begin() + static_cast<std::ptrdiff_t>(*s + lmj.size()), u.end());
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

namespace {

std::vector<Word> lead_monomials(const std::vector<Polynomial>& P) {
    std::vector<Word> out;
    out.reserve(P.size());
    for (const auto& p : P) out.push_back(p.lm());
    return out;
}

}  // namespace

AutoreduceResult autoreduce_logged(const std::vector<Polynomial>& P, const std::vector<LoggedRepresentation>& logs,
                                   DivisionKind d, DivisorMode mode) {
    const bool logged = !logs.empty();
    if (logged && logs.size() != P.size()) throw ArgumentError("one log per polynomial expected");
    AutoreduceResult res;
    for (std::size_t k = 0; k < P.size(); ++k) {
        if (P[k].is_zero()) continue;
        res.basis.push_back(P[k]);
        if (logged) res.logs.push_back(logs[k]);
    }
    if (res.basis.empty()) return res;
    const std::size_t n = res.basis.front().ordering().nvars();
    for (bool changed = true; changed;) {
        changed = false;
        // a constant generates everything and swallows the rest of the set
        const auto unit = std::find_if(res.basis.begin(), res.basis.end(),
                                       [](const Polynomial& p) { return p.lm().empty(); });
        if (unit != res.basis.end()) {
            const auto u = static_cast<std::size_t>(unit - res.basis.begin());
            res.steps += res.basis.size() - 1;
            res.basis = {res.basis[u]};
            if (logged) res.logs = {res.logs[u]};
            break;
        }
        const MultiplicativeTable table = assign_multiplicative(d, lead_monomials(res.basis), n);
        for (std::size_t i = 0; i < res.basis.size(); ++i) {
            InvDivResult r = inv_divide(res.basis[i], res.basis, table, d, mode, i);
            res.steps += r.steps;
            if (r.steps == 0) continue;
            LoggedRepresentation l;
            if (logged) {
                l = res.logs[i];
                l.add(r.log.substitute(res.logs), -1);
                res.logs.erase(res.logs.begin() + static_cast<std::ptrdiff_t>(i));
            }
            res.basis.erase(res.basis.begin() + static_cast<std::ptrdiff_t>(i));
            if (!r.remainder.is_zero()) {
                res.basis.push_back(std::move(r.remainder));
                if (logged) res.logs.push_back(std::move(l));
            }
            changed = true;
            break;
        }
    }
    return res;
}

std::vector<Polynomial> autoreduce(const std::vector<Polynomial>& P, DivisionKind d, DivisorMode mode) {
    return autoreduce_logged(P, {}, d, mode).basis;
}

namespace {

struct Prolongation {
    std::size_t elem;
    bool left;
    Letter x;
    Word lm;
};

std::vector<Prolongation> prolongations(const std::vector<Polynomial>& F, const MultiplicativeTable& T,
                                        std::size_t n) {
    std::vector<Prolongation> S;
    for (std::size_t e = 0; e < F.size(); ++e) {
        for (Letter x = 0; x < n; ++x)
            if (!T.left[e][x]) S.push_back({e, true, x, word_concat(Word{x}, F[e].lm())});
        for (Letter x = 0; x < n; ++x)
            if (!T.right[e][x]) S.push_back({e, false, x, word_concat(F[e].lm(), Word{x})});
    }
    return S;
}

Polynomial prolong(const Polynomial& f, const Prolongation& pr) {
    return pr.left ? word_mul_poly(Word{pr.x}, f, {}) : word_mul_poly({}, f, Word{pr.x});
}

}  // namespace

InvolutiveBasisResult involutive_basis(const std::vector<Polynomial>& F, const InvolutiveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (F.empty()) throw ArgumentError("empty input basis");
    const Ordering& ord = F.front().ordering();
    if (!ord.admissible()) throw ArgumentError("basis algorithms need an admissible ordering");
    for (const auto& f : F) {
        if (f.is_zero()) throw ArgumentError("zero polynomial in the input basis");
        if (!f.ordering().same_as(ord)) throw ArgumentError("input basis mixes orderings");
    }
    const std::size_t n = ord.nvars();
    const DivisionKind d = opts.division;
    const DivisorMode mode = opts.mode;

    InvolutiveBasisResult res;
    std::vector<LoggedRepresentation> logs;
    if (opts.logging)
        for (std::size_t k = 0; k < F.size(); ++k) logs.push_back(LoggedRepresentation::unit(k));
    AutoreduceResult cur = autoreduce_logged(F, logs, d, mode);
    res.stats.involutive_reductions += cur.steps;

    for (;;) {
        if (res.stats.iterations >= opts.limits.max_iterations) {
            res.status = RunStatus::IterationCapHit;
            break;
        }
        if (cur.basis.size() == 1 && cur.basis.front().lm().empty()) break;
        ++res.stats.iterations;
        const MultiplicativeTable T = assign_multiplicative(d, lead_monomials(cur.basis), n);
        auto S = prolongations(cur.basis, T, n);
        std::stable_sort(S.begin(), S.end(),
                         [&](const Prolongation& a, const Prolongation& b) { return ord.less(a.lm, b.lm); });
        std::optional<InvDivResult> hit;
        const Prolongation* from = nullptr;
        for (const auto& pr : S) {
            ++res.stats.prolongations;
            InvDivResult r = inv_divide(prolong(cur.basis[pr.elem], pr), cur.basis, T, d, mode);
            res.stats.involutive_reductions += r.steps;
            if (!r.remainder.is_zero()) {
                hit = std::move(r);
                from = &pr;
                break;
            }
        }
        if (!hit) break;
        if (hit->remainder.lm().size() > opts.limits.max_degree) {
            res.status = RunStatus::DegreeCapHit;
            break;
        }
        cur.basis.push_back(hit->remainder);
        if (opts.logging) {
            LoggedRepresentation l;
            const Word xw{from->x};
            l.add(cur.logs[from->elem], 1, from->left ? xw : Word{}, from->left ? Word{} : xw);
            l.add(hit->log.substitute(cur.logs), -1);
            cur.logs.push_back(std::move(l));
        }
        AutoreduceResult next = autoreduce_logged(cur.basis, cur.logs, d, mode);
        res.stats.involutive_reductions += next.steps;
        cur = std::move(next);
    }
    res.basis = std::move(cur.basis);
    res.logs = std::move(cur.logs);
    if (!res.basis.empty()) res.table = assign_multiplicative(d, lead_monomials(res.basis), n);
    res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

bool is_locally_involutive(const std::vector<Polynomial>& G, DivisionKind d, DivisorMode mode) {
    if (G.empty()) return true;
    const std::size_t n = G.front().ordering().nvars();
    const MultiplicativeTable T = assign_multiplicative(d, lead_monomials(G), n);
    for (const auto& pr : prolongations(G, T, n))
        if (!inv_divide(prolong(G[pr.elem], pr), G, T, d, mode).remainder.is_zero()) return false;
    return true;
}

}  // namespace ncgb
