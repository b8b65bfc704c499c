/*! \file longknot.hpp
 *  \brief Umbrella header.
 */

#pragma once

#include "longknot/braid.hpp"
#include "longknot/diagram.hpp"
#include "longknot/fixtures.hpp"
#include "longknot/generate.hpp"
#include "longknot/invariants.hpp"
#include "longknot/json.hpp"
#include "longknot/laurent.hpp"
#include "longknot/matrix.hpp"
#include "longknot/pd.hpp"
#include "longknot/planar.hpp"
