#pragma once

#include "hmls/bench.hpp"
#include "hmls/bounds.hpp"
#include "hmls/cost_vector.hpp"
#include "hmls/cover.hpp"
#include "hmls/dimacs.hpp"
#include "hmls/graph.hpp"
#include "hmls/hierarchy_io.hpp"
#include "hmls/mls.hpp"
#include "hmls/pareto_set.hpp"
#include "hmls/random_graph.hpp"
#include "hmls/rng.hpp"
#include "hmls/verify.hpp"
