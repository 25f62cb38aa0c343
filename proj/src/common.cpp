#include "ncgb/common.hpp"

namespace ncgb {

const char* status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Complete: return "complete";
        case RunStatus::DegreeCapHit: return "degree_cap_hit";
        case RunStatus::IterationCapHit: return "iteration_cap_hit";
    }
    return "?";
}

LoggedRepresentation LoggedRepresentation::unit(std::size_t index) {
    LoggedRepresentation r;
    r.add_entry(1, {}, index, {});
    return r;
}

void LoggedRepresentation::add_entry(const Rational& c, const Word& l, std::size_t index, const Word& r) {
    if (c == 0) return;
    auto [it, fresh] = entries_.try_emplace(Key{l, index, r}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

void LoggedRepresentation::add(const LoggedRepresentation& other, const Rational& c, const Word& l,
                               const Word& r) {
    if (c == 0) return;
    for (const auto& [key, v] : other.entries_) {
        const auto& [ol, idx, orr] = key;
        add_entry(c * v, word_concat(l, ol), idx, word_concat(orr, r));
    }
}

LoggedRepresentation LoggedRepresentation::scaled(const Rational& c) const {
    LoggedRepresentation r;
    r.add(*this, c);
    return r;
}

Polynomial LoggedRepresentation::expand(const std::vector<Polynomial>& inputs, const Ordering& ord) const {
    Polynomial acc(ord);
    for (const auto& [key, v] : entries_) {
        const auto& [l, idx, r] = key;
        if (idx >= inputs.size()) throw ArgumentError("logged index out of range");
        acc = acc.combine(term_mul_poly(Term{v, l}, inputs[idx], Term{1, r}), 1);
    }
    return acc;
}

LoggedRepresentation LoggedRepresentation::substitute(const std::vector<LoggedRepresentation>& subs) const {
    LoggedRepresentation out;
    for (const auto& [key, v] : entries_) {
        const auto& [l, idx, r] = key;
        if (idx >= subs.size()) throw ArgumentError("logged index out of range");
        out.add(subs[idx], v, l, r);
    }
    return out;
}

}  // namespace ncgb
