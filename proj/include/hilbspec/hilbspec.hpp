#pragma once

#include "hilbspec/experiment.hpp"
#include "hilbspec/factor.hpp"
#include "hilbspec/ideal_file.hpp"
#include "hilbspec/quotient.hpp"
#include "hilbspec/specialize.hpp"
