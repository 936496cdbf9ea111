#pragma once

#include "maskit/arcs.hpp"
#include "maskit/bipoly.hpp"
#include "maskit/config.hpp"
#include "maskit/coords.hpp"
#include "maskit/domain.hpp"
#include "maskit/errors.hpp"
#include "maskit/geometry.hpp"
#include "maskit/lamination.hpp"
#include "maskit/limitset.hpp"
#include "maskit/matrix.hpp"
#include "maskit/output.hpp"
#include "maskit/topterms.hpp"
#include "maskit/tracer.hpp"
#include "maskit/word.hpp"
