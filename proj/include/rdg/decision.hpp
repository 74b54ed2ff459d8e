#pragma once

#include "rdg/eptg.hpp"
#include "rdg/verdict.hpp"

namespace rdg {

Verdict decide_eptg(const Eptg &e, Mode mode = Mode::Effective);
Verdict decide_block(const PlaneGraph &g, Mode mode = Mode::Effective);
Verdict decide_separable(const PlaneGraph &g, Mode mode = Mode::Effective);

/// Dispatches on separability and attaches the structure report. With
/// `legacy` the older characterizations are evaluated alongside.
Verdict decide(const PlaneGraph &g, Mode mode = Mode::Effective, bool legacy = false);

} // namespace rdg
