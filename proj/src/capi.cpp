#include "ncgb.h"

#include "ncgb/groebner.hpp"
#include "ncgb/involutive.hpp"
#include "ncgb/walk.hpp"

#include <cstring>
#include <string>

using namespace ncgb;

struct ncgb_ring {
    Ordering ord;
};

struct ncgb_basis {
    Ordering ord;
    std::vector<Polynomial> polys;
    std::vector<LoggedRepresentation> logs;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_column = 0;

ncgb_status fail(ncgb_status s, std::string msg, std::size_t column = 0) {
    last_error = std::move(msg);
    last_column = column;
    return s;
}

ncgb_status ok() {
    last_error.clear();
    last_column = 0;
    return NCGB_OK;
}

template <class F>
ncgb_status guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return fail(NCGB_E_PARSE, e.what(), e.column());
    } catch (const ArgumentError& e) {
        return fail(NCGB_E_ARG, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NCGB_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(NCGB_E_INTERNAL, e.what());
    } catch (...) {
        return fail(NCGB_E_INTERNAL, "unknown error");
    }
}

OrderKind to_kind(ncgb_order o) {
    switch (o) {
        case NCGB_DEGLEX: return OrderKind::DegLex;
        case NCGB_DEGINVLEX: return OrderKind::DegInvLex;
        case NCGB_DEGREVLEX: return OrderKind::DegRevLex;
    }
    throw ArgumentError("unknown ordering");
}

ncgb_order from_kind(OrderKind k) {
    switch (k) {
        case OrderKind::DegLex: return NCGB_DEGLEX;
        case OrderKind::DegInvLex: return NCGB_DEGINVLEX;
        default: return NCGB_DEGREVLEX;
    }
}

ncgb_run_status to_run(RunStatus s) {
    switch (s) {
        case RunStatus::Complete: return NCGB_RUN_COMPLETE;
        case RunStatus::DegreeCapHit: return NCGB_RUN_DEGREE_CAP;
        case RunStatus::IterationCapHit: return NCGB_RUN_ITERATION_CAP;
    }
    return NCGB_RUN_COMPLETE;
}

ncgb_options defaults() {
    ncgb_options o;
    ncgb_options_default(&o);
    return o;
}

Limits limits_of(const ncgb_options& o) {
    Limits l;
    l.max_degree = o.max_degree;
    l.max_iterations = o.max_iterations;
    return l;
}

DivisionKind division_of(const ncgb_options& o) {
    auto d = division_from_key(o.division);
    if (!d) throw ArgumentError("division key must be in 1..12, got " + std::to_string(o.division));
    return *d;
}

ncgb_status copy_out(const std::string& s, char* buf, std::size_t cap, std::size_t* needed) {
    if (needed) *needed = s.size() + 1;
    if (buf && cap > 0) {
        const std::size_t n = std::min(cap - 1, s.size());
        std::memcpy(buf, s.data(), n);
        buf[n] = '\0';
    }
    return ok();
}

std::string format_log(const LoggedRepresentation& log, const Alphabet& a) {
    std::string out;
    for (const auto& [key, c] : log.entries()) {
        const auto& [l, idx, r] = key;
        std::string t = format_rational(abs(c));
        if (!l.empty()) t += "*" + format_word(l, a);
        t += "*f" + std::to_string(idx + 1);
        if (!r.empty()) t += "*" + format_word(r, a);
        if (out.empty())
            out = (sgn(c) < 0 ? "-" : "") + t;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + t;
    }
    return out.empty() ? "0" : out;
}

void check_input(const ncgb_basis* in) {
    if (!in) throw ArgumentError("null basis");
    if (in->polys.empty()) throw ArgumentError("empty basis");
}

}  // namespace

extern "C" {

const char* ncgb_last_error(void) { return last_error.c_str(); }
size_t ncgb_last_error_column(void) { return last_column; }

void ncgb_options_default(ncgb_options* opts) {
    if (!opts) return;
    opts->strategy = NCGB_STRATEGY_NORMAL;
    opts->criterion2 = 1;
    opts->division = 1;
    opts->thick = 0;
    Limits l;
    opts->max_degree = l.max_degree;
    opts->max_iterations = l.max_iterations;
    opts->logging = 0;
}

const char* ncgb_order_name(ncgb_order order) {
    try {
        return order_name(to_kind(order));
    } catch (...) {
        return "";
    }
}

ncgb_status ncgb_order_parse(const char* name, ncgb_order* out) {
    return guarded([&] {
        if (!name || !out) throw ArgumentError("null argument");
        auto k = parse_order_name(name);
        if (!k) return fail(NCGB_E_ARG, std::string("unknown ordering '") + name + "'");
        if (*k == OrderKind::Lex || *k == OrderKind::InvLex)
            return fail(NCGB_E_UNSUPPORTED, std::string("ordering '") + name + "' is not admissible");
        *out = from_kind(*k);
        return ok();
    });
}

ncgb_status ncgb_ring_new(const char* const* names, size_t n, ncgb_order order, ncgb_ring** out) {
    return guarded([&] {
        if (!out) throw ArgumentError("null output handle");
        *out = nullptr;
        if (!names && n > 0) throw ArgumentError("null name list");
        std::vector<std::string> v;
        for (size_t i = 0; i < n; ++i) {
            if (!names[i]) throw ArgumentError("null generator name");
            v.emplace_back(names[i]);
        }
        *out = new ncgb_ring{Ordering(to_kind(order), make_alphabet(std::move(v)))};
        return ok();
    });
}

void ncgb_ring_free(ncgb_ring* ring) { delete ring; }

ncgb_status ncgb_basis_new(const ncgb_ring* ring, ncgb_basis** out) {
    return guarded([&] {
        if (!ring || !out) throw ArgumentError("null argument");
        *out = new ncgb_basis{ring->ord, {}, {}};
        return ok();
    });
}

void ncgb_basis_free(ncgb_basis* basis) { delete basis; }

ncgb_status ncgb_basis_add(ncgb_basis* basis, const char* text) {
    return guarded([&] {
        if (!basis || !text) throw ArgumentError("null argument");
        Polynomial p = parse_polynomial(text, basis->ord);
        if (p.is_zero()) throw ArgumentError("zero polynomial");
        basis->polys.push_back(std::move(p));
        return ok();
    });
}

size_t ncgb_basis_size(const ncgb_basis* basis) { return basis ? basis->polys.size() : 0; }

ncgb_order ncgb_basis_order(const ncgb_basis* basis) {
    return basis ? from_kind(basis->ord.kind()) : NCGB_DEGREVLEX;
}

ncgb_status ncgb_basis_get(const ncgb_basis* basis, size_t i, char* buf, size_t cap, size_t* needed) {
    return guarded([&] {
        if (!basis) throw ArgumentError("null basis");
        if (i >= basis->polys.size()) throw ArgumentError("index out of range");
        return copy_out(format_polynomial(basis->polys[i]), buf, cap, needed);
    });
}

ncgb_status ncgb_basis_get_log(const ncgb_basis* basis, size_t i, char* buf, size_t cap, size_t* needed) {
    return guarded([&] {
        if (!basis) throw ArgumentError("null basis");
        if (i >= basis->polys.size()) throw ArgumentError("index out of range");
        if (basis->logs.size() != basis->polys.size()) throw ArgumentError("basis carries no logged representations");
        return copy_out(format_log(basis->logs[i], *basis->ord.alphabet()), buf, cap, needed);
    });
}

ncgb_status ncgb_groebner(const ncgb_basis* in, const ncgb_options* opts, ncgb_basis** out, ncgb_run_status* run,
                          ncgb_stats* stats) {
    return guarded([&] {
        check_input(in);
        if (!out) throw ArgumentError("null output handle");
        const ncgb_options o = opts ? *opts : defaults();
        GroebnerOptions g;
        g.strategy = o.strategy == NCGB_STRATEGY_SUGAR ? Strategy::Sugar : Strategy::Normal;
        g.criterion2 = o.criterion2 != 0;
        g.limits = limits_of(o);
        g.logging = o.logging != 0;
        GroebnerResult r = mora(in->polys, g);
        if (stats) {
            *stats = ncgb_stats{};
            stats->basis_size = r.basis.size();
            stats->spolys = r.stats.spolys_considered;
            stats->criterion_skips = r.stats.criterion_skips;
            stats->reductions = r.stats.reductions;
            stats->iterations = r.stats.spolys_considered;
            stats->seconds = r.stats.seconds;
        }
        if (run) *run = to_run(r.status);
        *out = new ncgb_basis{in->ord, std::move(r.basis), std::move(r.logs)};
        return ok();
    });
}

ncgb_status ncgb_involutive(const ncgb_basis* in, const ncgb_options* opts, ncgb_basis** out, ncgb_run_status* run,
                            ncgb_stats* stats) {
    return guarded([&] {
        check_input(in);
        if (!out) throw ArgumentError("null output handle");
        const ncgb_options o = opts ? *opts : defaults();
        InvolutiveOptions io;
        io.division = division_of(o);
        io.mode = o.thick ? DivisorMode::Thick : DivisorMode::Thin;
        io.limits = limits_of(o);
        io.logging = o.logging != 0;
        InvolutiveBasisResult r = involutive_basis(in->polys, io);
        if (stats) {
            *stats = ncgb_stats{};
            stats->basis_size = r.basis.size();
            stats->prolongations = r.stats.prolongations;
            stats->reductions = r.stats.involutive_reductions;
            stats->iterations = r.stats.iterations;
            stats->seconds = r.stats.seconds;
        }
        if (run) *run = to_run(r.status);
        *out = new ncgb_basis{in->ord, std::move(r.basis), std::move(r.logs)};
        return ok();
    });
}

ncgb_status ncgb_reduce_basis(const ncgb_basis* in, ncgb_basis** out) {
    return guarded([&] {
        if (!in || !out) throw ArgumentError("null argument");
        *out = new ncgb_basis{in->ord, reduce_basis(in->polys), {}};
        return ok();
    });
}

ncgb_status ncgb_reduce(const ncgb_basis* basis, const char* text, char* buf, size_t cap, size_t* needed,
                        int* is_member) {
    return guarded([&] {
        if (!basis || !text) throw ArgumentError("null argument");
        Polynomial p = parse_polynomial(text, basis->ord);
        Polynomial r = divide(p, basis->polys).remainder;
        if (is_member) *is_member = r.is_zero() ? 1 : 0;
        return copy_out(format_polynomial(r), buf, cap, needed);
    });
}

namespace {

ncgb_status walk(const ncgb_basis* in, ncgb_order target, const ncgb_options* opts, ncgb_basis** out,
                 ncgb_run_status* run, bool involutive) {
    return guarded([&] {
        check_input(in);
        if (!out) throw ArgumentError("null output handle");
        const ncgb_options o = opts ? *opts : defaults();
        WalkJob job{in->polys, Ordering(to_kind(target), in->ord.alphabet()), DivisionKind::Left, DivisorMode::Thin,
                    limits_of(o)};
        if (involutive) {
            job.division = division_of(o);
            job.mode = o.thick ? DivisorMode::Thick : DivisorMode::Thin;
        }
        WalkResult r = involutive ? involutive_walk(job) : groebner_walk(job);
        if (run) *run = to_run(r.status);
        *out = new ncgb_basis{job.target, std::move(r.basis), {}};
        return ok();
    });
}

}  // namespace

ncgb_status ncgb_groebner_walk(const ncgb_basis* in, ncgb_order target, const ncgb_options* opts, ncgb_basis** out,
                               ncgb_run_status* run) {
    return walk(in, target, opts, out, run, false);
}

ncgb_status ncgb_involutive_walk(const ncgb_basis* in, ncgb_order target, const ncgb_options* opts, ncgb_basis** out,
                                 ncgb_run_status* run) {
    return walk(in, target, opts, out, run, true);
}

}  // extern "C"
