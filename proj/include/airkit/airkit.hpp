#pragma once

#include "airkit/capacity/design_peak.hpp"
#include "airkit/capacity/headway.hpp"
#include "airkit/capacity/mix_index.hpp"
#include "airkit/capacity/separation.hpp"
#include "airkit/capacity/terminal.hpp"
#include "airkit/core/csv.hpp"
#include "airkit/core/geo.hpp"
#include "airkit/core/rotations.hpp"
#include "airkit/core/schedule.hpp"
#include "airkit/core/time.hpp"
#include "airkit/core/turnaround.hpp"
#include "airkit/core/types.hpp"
#include "airkit/core/weather.hpp"
#include "airkit/econ/envelope.hpp"
#include "airkit/econ/growth.hpp"
#include "airkit/econ/pso.hpp"
#include "airkit/emissions/emissions.hpp"
#include "airkit/net/cindex.hpp"
#include "airkit/net/propagation.hpp"
#include "airkit/perf/cumulative.hpp"
#include "airkit/perf/delay_fit.hpp"
#include "airkit/perf/gilbo.hpp"
#include "airkit/perf/littles_law.hpp"
#include "airkit/perf/punctuality.hpp"
#include "airkit/sim/airfield.hpp"
#include "airkit/sim/builder.hpp"
#include "airkit/sim/engine.hpp"
#include "airkit/sim/event_log.hpp"
#include "airkit/sim/scenario.hpp"
#include "airkit/sim/sweep.hpp"
#include "airkit/vrp/feasibility.hpp"
#include "airkit/vrp/generator.hpp"
#include "airkit/vrp/greedy.hpp"
#include "airkit/vrp/instance.hpp"
#include "airkit/vrp/lns.hpp"
#include "airkit/vrp/oracle.hpp"
