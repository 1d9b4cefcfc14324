#pragma once

#include "born.hpp"
#include "convert.hpp"
#include "core.hpp"
#include "error.hpp"
#include "propagator.hpp"
#include "quadrature.hpp"
#include "richardson.hpp"
#include "scatter.hpp"
#include "verify.hpp"
#include "version.hpp"
