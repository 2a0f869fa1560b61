#pragma once

#include "activelogic/status.hpp"
#include "activelogic/trace.hpp"
#include "activelogic/dsl.hpp"
#include "activelogic/evaluate.hpp"
#include "activelogic/engine.hpp"
#include "activelogic/world.hpp"
#include "activelogic/sim.hpp"
#include "activelogic/coffee.hpp"
#include "activelogic/forager.hpp"
#include "activelogic/scenarios.hpp"
