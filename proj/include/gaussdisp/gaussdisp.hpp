#pragma once

#include "gaussdisp/checks.hpp"
#include "gaussdisp/gaussian_tensor.hpp"
#include "gaussdisp/oracle.hpp"
#include "gaussdisp/point_dipole.hpp"
#include "gaussdisp/potentials.hpp"
#include "gaussdisp/quadrature.hpp"
#include "gaussdisp/quantities.hpp"
#include "gaussdisp/species_data.hpp"
#include "gaussdisp/sweep.hpp"
