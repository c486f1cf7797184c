#pragma once

#include "momentum/exactq.hpp"
#include "momentum/rootsys.hpp"
#include "momentum/repweights.hpp"
#include "momentum/polyhedra.hpp"
#include "momentum/momentum.hpp"
#include "momentum/serialize.hpp"
#include "momentum/svg.hpp"
#include "momentum/cli.hpp"
