#pragma once

#include "ncgb/common.hpp"
#include "ncgb/spoly.hpp"

namespace ncgb {

struct DivisionResult {
    Polynomial remainder;
    // quotient part, indexed over the divisor list
    LoggedRepresentation log;
    std::size_t steps = 0;
};

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& P);

enum class Strategy { Normal, Sugar };

struct GroebnerOptions {
    Strategy strategy = Strategy::Normal;
    bool criterion2 = true;
    bool logging = false;
    Limits limits;
};

struct GroebnerStats {
    std::size_t spolys_considered = 0;
    std::size_t zero_reductions = 0;
    std::size_t criterion_skips = 0;
    std::size_t reductions = 0;
    double seconds = 0;
};

struct GroebnerResult {
    std::vector<Polynomial> basis;
    // over the input list, present when logging is on
    std::vector<LoggedRepresentation> logs;
    GroebnerStats stats;
    RunStatus status = RunStatus::Complete;
};

GroebnerResult mora(const std::vector<Polynomial>& F, const GroebnerOptions& opts = {});

std::size_t sugar_value(const OverlapSpec& spec, std::size_t sugar_i, std::size_t sugar_j);

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& G);

struct LoggedBasis {
    std::vector<Polynomial> basis;
    std::vector<LoggedRepresentation> logs;
};

// logs[k] expresses G[k]; output logs are over the same inputs
LoggedBasis reduce_basis_logged(const std::vector<Polynomial>& G, const std::vector<LoggedRepresentation>& logs);

// every S-polynomial of G divides to zero
bool is_groebner_basis(const std::vector<Polynomial>& G);

void sort_descending(std::vector<Polynomial>& G);

}  // namespace ncgb
