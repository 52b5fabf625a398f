#pragma once

#include "lmg/coherence.hpp"
#include "lmg/solver.hpp"
#include "lmg/steered.hpp"

namespace lmg {

/// Everything the exact-diagonalization pipeline produces for one
/// parameter point.
struct PipelineResult {
  GroundStateSolution ground;
  CollectiveMoments moments;
  TwoSpinXState x;
  MeasureSet measures;
};

/// Solve the ground state and evaluate all closed-form indicators.
PipelineResult run_pipeline(const ModelParams& params);

/// Convenience: just the indicator values.
MeasureSet measure_set(const ModelParams& params);

}  // namespace lmg
