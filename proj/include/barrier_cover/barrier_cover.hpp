#pragma once

// Umbrella header for the barrier-cover solver library.

#include "barrier_cover/barrier_graph.hpp"
#include "barrier_cover/factor2.hpp"
#include "barrier_cover/greedy.hpp"
#include "barrier_cover/io.hpp"
#include "barrier_cover/lp_round.hpp"
#include "barrier_cover/matching.hpp"
#include "barrier_cover/model.hpp"
#include "barrier_cover/oracle.hpp"
#include "barrier_cover/search.hpp"
#include "barrier_cover/svg.hpp"
