#pragma once

// Umbrella header: the whole library.

#include "relmon/decide.hpp"
#include "relmon/enumerate.hpp"
#include "relmon/graph_functor.hpp"
#include "relmon/normalize.hpp"
#include "relmon/oracle.hpp"
#include "relmon/parser.hpp"
#include "relmon/relation.hpp"
#include "relmon/schemas.hpp"
#include "relmon/soundness.hpp"
#include "relmon/terms.hpp"
#include "relmon/typing.hpp"

// cli.hpp is intentionally separate: it pulls in the vendored CLI11 and
// json headers, which test binaries that exercise the library do not need.
