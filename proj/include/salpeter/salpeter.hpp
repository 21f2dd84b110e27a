#pragma once

// Umbrella header.

#include "salpeter/numeric.hpp"
#include "salpeter/qho_basis.hpp"
#include "salpeter/formulas.hpp"
#include "salpeter/kramers.hpp"
#include "salpeter/laguerre_me.hpp"
#include "salpeter/ladder2d.hpp"
#include "salpeter/spectrum.hpp"
#include "salpeter/spectrum_io.hpp"
#include "salpeter/oracle.hpp"
#include "salpeter/verify.hpp"
