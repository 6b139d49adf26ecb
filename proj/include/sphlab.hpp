#pragma once

#include "sphlab/angles.hpp"
#include "sphlab/config.hpp"
#include "sphlab/error.hpp"
#include "sphlab/group.hpp"
#include "sphlab/jacobi.hpp"
#include "sphlab/quadrature.hpp"
#include "sphlab/quaternion.hpp"
#include "sphlab/report.hpp"
#include "sphlab/reps.hpp"
#include "sphlab/sampling.hpp"
#include "sphlab/spherical.hpp"
#include "sphlab/su2.hpp"
#include "sphlab/verify.hpp"
#include "sphlab/weights.hpp"
