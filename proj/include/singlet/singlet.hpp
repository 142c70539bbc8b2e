#pragma once

#include "singlet/bounds.hpp"
#include "singlet/concurrence.hpp"
#include "singlet/error.hpp"
#include "singlet/harness.hpp"
#include "singlet/linalg.hpp"
#include "singlet/qstate.hpp"
#include "singlet/rng.hpp"
#include "singlet/sampling.hpp"
#include "singlet/spun_state.hpp"
#include "singlet/state_io.hpp"
#include "singlet/twirl.hpp"
#include "singlet/verify.hpp"
