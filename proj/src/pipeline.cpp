#include "lmg/pipeline.hpp"

#include "lmg/reduced.hpp"

namespace lmg {

PipelineResult run_pipeline(const ModelParams& params) {
  PipelineResult r;
  r.ground = global_ground_state(params);
  r.moments = moments_from_state(r.ground);
  r.x = two_spin_state(r.moments);
  r.measures.coherence = coherence_two_spin(r.x);
  r.measures.asc = asc_closed_form(r.x);
  r.measures.msc = msc_closed_form(r.x);
  r.measures.single_max = max_single_spin_coherence(single_spin_state(r.x));
  return r;
}

MeasureSet measure_set(const ModelParams& params) { return run_pipeline(params).measures; }

}  // namespace lmg
