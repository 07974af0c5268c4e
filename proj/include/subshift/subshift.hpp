#pragma once

// Umbrella header: symbolic dynamics for binary subshifts — words and
// languages, sofic presentations, entropy and density computations, B-free
// and Sturmian generators, block distributions, the Bernoulli-half
// convolution and its Gibbs diagnostics.

#include "subshift/bitseq.hpp"
#include "subshift/block.hpp"
#include "subshift/distribution.hpp"
#include "subshift/embedding.hpp"
#include "subshift/errors.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/generators.hpp"
#include "subshift/gibbs.hpp"
#include "subshift/graph.hpp"
#include "subshift/language.hpp"
#include "subshift/spec.hpp"
#include "subshift/spec_io.hpp"
#include "subshift/spectral.hpp"
