#pragma once

#include <string>

#include "symdet/ensembles.hpp"
#include "symdet/naimark.hpp"
#include "symdet/oracle.hpp"
#include "symdet/povm.hpp"

// JSON and CSV interchange. Every number is emitted with 17 significant
// digits so files round-trip doubles exactly.
//
// Ensemble schema: { "dim": n, "priors": [...], "states": [[[re, im], ...], ...] }
// with each state a row-major list of dim² [re, im] pairs. The POVM schema
// mirrors it ({ "dim": n, "elements": [...] }); a compact rank-1-real form
// { "weights": [...], "angles_rad": [...] } is accepted and emitted where
// applicable.

namespace symdet {

std::string fmt17(double x);

std::string dump_ensemble_json(const Ensemble &e);
std::string dump_povm_json(const Povm &p);
std::string dump_plan_json(const NaimarkPlan &plan);

/// CSV with header `theta_rad,info_<unit>`, one row per sample.
std::string sweep_to_csv(const SweepCurve &curve, bool bits);
/// CSV with header `port,probability`.
std::string stats_to_csv(const DetectionStats &stats);

/// Parses either the full or the compact POVM schema. No semantic checks.
Povm load_povm_json(const std::string &text);
/// Parses and fully validates; throws naming the first violation.
Ensemble load_ensemble_json(const std::string &text);

} // namespace symdet
