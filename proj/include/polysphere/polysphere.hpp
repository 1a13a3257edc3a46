#ifndef POLYSPHERE_POLYSPHERE_HPP
#define POLYSPHERE_POLYSPHERE_HPP

#include "polysphere/catalog.hpp"
#include "polysphere/cli.hpp"
#include "polysphere/errors.hpp"
#include "polysphere/faces.hpp"
#include "polysphere/io.hpp"
#include "polysphere/isometry.hpp"
#include "polysphere/linalg.hpp"
#include "polysphere/lp.hpp"
#include "polysphere/polytope.hpp"
#include "polysphere/properties.hpp"
#include "polysphere/rational.hpp"
#include "polysphere/report.hpp"
#include "polysphere/sampler.hpp"
#include "polysphere/space.hpp"

#endif  // POLYSPHERE_POLYSPHERE_HPP
