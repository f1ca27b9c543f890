#pragma once

#include "smalldoubling/additive.hpp"
#include "smalldoubling/bigint.hpp"
#include "smalldoubling/cover_search.hpp"
#include "smalldoubling/encoding.hpp"
#include "smalldoubling/errors.hpp"
#include "smalldoubling/generate.hpp"
#include "smalldoubling/instance.hpp"
#include "smalldoubling/instance_io.hpp"
#include "smalldoubling/meta.hpp"
#include "smalldoubling/oracle.hpp"
#include "smalldoubling/polynomial.hpp"
#include "smalldoubling/solvers.hpp"
#include "smalldoubling/verify.hpp"
