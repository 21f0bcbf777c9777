#pragma once

// Umbrella header for the dgo library: Gray-coded segment-inversion search
// with dynamic resolution, the benchmark objective suite, reference
// optimizers, and the experiment harness.

#include "dgo/baselines.hpp"
#include "dgo/bitstring.hpp"
#include "dgo/core.hpp"
#include "dgo/encoding.hpp"
#include "dgo/errors.hpp"
#include "dgo/experiment.hpp"
#include "dgo/objective.hpp"
#include "dgo/objectives.hpp"
#include "dgo/rng.hpp"
#include "dgo/serialize.hpp"
