#pragma once

#include "rcdg/basis.hpp"
#include "rcdg/central_dg1d.hpp"
#include "rcdg/central_dg2d.hpp"
#include "rcdg/config.hpp"
#include "rcdg/eos.hpp"
#include "rcdg/errors.hpp"
#include "rcdg/integrator.hpp"
#include "rcdg/limiter.hpp"
#include "rcdg/mesh.hpp"
#include "rcdg/norms.hpp"
#include "rcdg/problems.hpp"
#include "rcdg/properties.hpp"
#include "rcdg/quadrature.hpp"
#include "rcdg/recovery.hpp"
#include "rcdg/reference.hpp"
#include "rcdg/scheme.hpp"
#include "rcdg/setup.hpp"
#include "rcdg/snapshot.hpp"
#include "rcdg/solution.hpp"
#include "rcdg/state.hpp"
