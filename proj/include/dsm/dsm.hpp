#pragma once

#include "dsm/acquisition.hpp"
#include "dsm/asymptotic.hpp"
#include "dsm/forward.hpp"
#include "dsm/geometry.hpp"
#include "dsm/grid.hpp"
#include "dsm/imaging.hpp"
#include "dsm/io.hpp"
#include "dsm/scene.hpp"
#include "dsm/specfun.hpp"
