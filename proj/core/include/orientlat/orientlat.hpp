#pragma once

#include "orientlat/chromatic.hpp"
#include "orientlat/errors.hpp"
#include "orientlat/firing_poset.hpp"
#include "orientlat/geometry.hpp"
#include "orientlat/graph.hpp"
#include "orientlat/graph_catalog.hpp"
#include "orientlat/lattice.hpp"
#include "orientlat/orientation.hpp"
#include "orientlat/rational.hpp"
#include "orientlat/sampling.hpp"
#include "orientlat/serialization.hpp"
#include "orientlat/verify.hpp"
