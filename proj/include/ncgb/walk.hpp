#pragma once

#include "ncgb/groebner.hpp"
#include "ncgb/involutive.hpp"

namespace ncgb {

struct WalkJob {
    std::vector<Polynomial> basis;  // under the source ordering
    Ordering target;
    DivisionKind division = DivisionKind::Left;
    DivisorMode mode = DivisorMode::Thin;
    Limits limits;
};

struct WalkResult {
    std::vector<Polynomial> basis;
    // initials G' and the intermediate basis H' for in(J)
    std::vector<Polynomial> initials;
    std::vector<Polynomial> initial_basis;
    // H' over G'; lifting substitutes the full basis elements
    std::vector<LoggedRepresentation> logs;
    RunStatus status = RunStatus::Complete;
};

WalkResult groebner_walk(const WalkJob& job);
WalkResult involutive_walk(const WalkJob& job);

}  // namespace ncgb
