#pragma once

#include "parklot/bijections.hpp"
#include "parklot/enumeration.hpp"
#include "parklot/error.hpp"
#include "parklot/lattice_paths.hpp"
#include "parklot/parking.hpp"
#include "parklot/render.hpp"
#include "parklot/verify.hpp"
