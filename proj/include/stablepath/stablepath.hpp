// Umbrella header.

#ifndef STABLEPATH_STABLEPATH_HPP_
#define STABLEPATH_STABLEPATH_HPP_

#include "stablepath/alpha.hpp"
#include "stablepath/beta.hpp"
#include "stablepath/delta.hpp"
#include "stablepath/gamma.hpp"
#include "stablepath/instance.hpp"
#include "stablepath/lattice.hpp"
#include "stablepath/max_flow.hpp"
#include "stablepath/oracle.hpp"
#include "stablepath/path.hpp"
#include "stablepath/rotation.hpp"

#endif  // STABLEPATH_STABLEPATH_HPP_
