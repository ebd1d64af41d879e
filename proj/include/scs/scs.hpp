#pragma once

// Umbrella header for the SCS library: sample diverse local optima, cluster
// them by Jaccard dissimilarity, and select one representative per cluster.

#include "scs/baselines.hpp"
#include "scs/clustering.hpp"
#include "scs/diversity.hpp"
#include "scs/element_set.hpp"
#include "scs/error.hpp"
#include "scs/graph.hpp"
#include "scs/harness.hpp"
#include "scs/instance_gen.hpp"
#include "scs/io.hpp"
#include "scs/pipeline.hpp"
#include "scs/rng.hpp"
#include "scs/selection.hpp"
#include "scs/sp_sampler.hpp"
#include "scs/spp.hpp"
#include "scs/tsp.hpp"
#include "scs/viz.hpp"
