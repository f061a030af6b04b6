#pragma once

#include "pegsim/capture.hpp"
#include "pegsim/config.hpp"
#include "pegsim/config_io.hpp"
#include "pegsim/engine.hpp"
#include "pegsim/experiment.hpp"
#include "pegsim/format.hpp"
#include "pegsim/game.hpp"
#include "pegsim/learning.hpp"
#include "pegsim/plot.hpp"
#include "pegsim/rng.hpp"
#include "pegsim/strategies.hpp"
#include "pegsim/trace.hpp"
#include "pegsim/trace_io.hpp"
#include "pegsim/vec2.hpp"
#include "pegsim/world.hpp"
