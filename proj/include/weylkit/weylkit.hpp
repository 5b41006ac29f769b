#pragma once

#include "weylkit/error.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/generator.hpp"
#include "weylkit/rewriting.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/pbw.hpp"
#include "weylkit/shriek.hpp"
#include "weylkit/quadratic_dual.hpp"
#include "weylkit/localization.hpp"
#include "weylkit/render.hpp"
#include "weylkit/sampling.hpp"
#include "weylkit/verify.hpp"
#include "weylkit/cli.hpp"
