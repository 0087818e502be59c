#pragma once

#include "orbit_bell/bell_bounds.hpp"
#include "orbit_bell/classical_orbits.hpp"
#include "orbit_bell/errors.hpp"
#include "orbit_bell/linalg.hpp"
#include "orbit_bell/orbits.hpp"
#include "orbit_bell/representations.hpp"
#include "orbit_bell/serialization.hpp"
#include "orbit_bell/z4_model.hpp"
