#pragma once

// Umbrella header: Margulis invariants of affine deformations of
// three-holed-sphere Fuchsian groups.

#include "margulis/config.hpp"
#include "margulis/cocycle.hpp"
#include "margulis/deformation.hpp"
#include "margulis/deformed_traces.hpp"
#include "margulis/holonomy.hpp"
#include "margulis/invariant.hpp"
#include "margulis/isometry.hpp"
#include "margulis/lorentz.hpp"
#include "margulis/rng.hpp"
#include "margulis/scan.hpp"
#include "margulis/words.hpp"
