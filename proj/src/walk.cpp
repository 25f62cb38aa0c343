#include "ncgb/walk.hpp"

namespace ncgb {

namespace {

struct Prepared {
    std::vector<Polynomial> full;      // input basis under the target ordering
    std::vector<Polynomial> initials;  // in_theta of each, under the target ordering
};

Prepared prepare(const WalkJob& job) {
    if (job.basis.empty()) throw ArgumentError("empty walk input");
    const Ordering& source = job.basis.front().ordering();
    if (!harmonious(source.kind(), job.target.kind()))
        throw ArgumentError(std::string("orderings ") + order_name(source.kind()) + " and " +
                            order_name(job.target.kind()) +
                            " are not harmonious: their first ordering functions must be identical and extendible");
    const OrderingFunction theta = FunctionalDecomposition(source.kind()).function(1);
    Prepared p;
    for (const auto& g : job.basis) {
        if (g.is_zero()) throw ArgumentError("zero polynomial in the walk input");
        p.full.push_back(g.reordered(job.target));
        p.initials.push_back(initial(g, theta).reordered(job.target));
    }
    return p;
}

std::vector<Polynomial> lift(const std::vector<LoggedRepresentation>& logs, const std::vector<Polynomial>& full,
                             const Ordering& ord) {
    std::vector<Polynomial> out;
    for (const auto& l : logs) out.push_back(l.expand(full, ord));
    return out;
}

}  // namespace

WalkResult groebner_walk(const WalkJob& job) {
    Prepared p = prepare(job);
    GroebnerOptions opts;
    opts.logging = true;
    opts.limits = job.limits;
    GroebnerResult inner = mora(p.initials, opts);
    LoggedBasis reduced = reduce_basis_logged(inner.basis, inner.logs);
    WalkResult res;
    res.status = inner.status;
    res.initials = p.initials;
    res.initial_basis = reduced.basis;
    res.logs = reduced.logs;
    res.basis = reduce_basis(lift(reduced.logs, p.full, job.target));
    return res;
}

WalkResult involutive_walk(const WalkJob& job) {
    Prepared p = prepare(job);
    InvolutiveOptions opts;
    opts.division = job.division;
    opts.mode = job.mode;
    opts.logging = true;
    opts.limits = job.limits;
    InvolutiveBasisResult inner = involutive_basis(p.initials, opts);
    WalkResult res;
    res.status = inner.status;
    res.initials = p.initials;
    res.initial_basis = inner.basis;
    res.logs = inner.logs;
    res.basis = lift(inner.logs, p.full, job.target);
    return res;
}

}  // namespace ncgb
