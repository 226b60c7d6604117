#pragma once

#include "gmalg/errors.hpp"
#include "gmalg/scalar.hpp"
#include "gmalg/linsolve.hpp"
#include "gmalg/submodule.hpp"
#include "gmalg/algebra.hpp"
#include "gmalg/morita.hpp"
#include "gmalg/maps.hpp"
#include "gmalg/derivations.hpp"
#include "gmalg/families.hpp"
#include "gmalg/oracle.hpp"
#include "gmalg/report.hpp"
#include "gmalg/sweep.hpp"
#include "gmalg/io.hpp"
