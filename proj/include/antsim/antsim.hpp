#pragma once
// Umbrella header.

#include "antsim/agents.hpp"
#include "antsim/config.hpp"
#include "antsim/config_io.hpp"
#include "antsim/csv_io.hpp"
#include "antsim/engine.hpp"
#include "antsim/grid.hpp"
#include "antsim/metrics.hpp"
#include "antsim/render.hpp"
#include "antsim/rng.hpp"
#include "antsim/sweep.hpp"
