#pragma once

#include "fourkin/calculus.hpp"
#include "fourkin/checks.hpp"
#include "fourkin/christoffel_oracle.hpp"
#include "fourkin/errors.hpp"
#include "fourkin/fields.hpp"
#include "fourkin/finite_difference.hpp"
#include "fourkin/flow.hpp"
#include "fourkin/linalg.hpp"
#include "fourkin/motion.hpp"
#include "fourkin/registry.hpp"
#include "fourkin/report.hpp"
#include "fourkin/runner.hpp"
#include "fourkin/scenario.hpp"
#include "fourkin/spacetime.hpp"
#include "fourkin/toml_lite.hpp"
