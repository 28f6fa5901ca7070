#pragma once

#include "torusphase/finite_difference.hpp"
#include "torusphase/geometry.hpp"
#include "torusphase/quantum.hpp"
#include "torusphase/topology.hpp"
#include "torusphase/transport.hpp"
#include "torusphase/types.hpp"
