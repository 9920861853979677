#pragma once

#include "accelqc/closed_forms.hpp"
#include "accelqc/csv.hpp"
#include "accelqc/errors.hpp"
#include "accelqc/matrix.hpp"
#include "accelqc/measures.hpp"
#include "accelqc/options.hpp"
#include "accelqc/ptsym.hpp"
#include "accelqc/spectrum.hpp"
#include "accelqc/state.hpp"
#include "accelqc/sweep.hpp"
#include "accelqc/unruh.hpp"
