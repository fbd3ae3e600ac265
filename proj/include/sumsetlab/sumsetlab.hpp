#pragma once

// Umbrella header for the whole library.

#include "sumsetlab/ap_engine.hpp"
#include "sumsetlab/bits.hpp"
#include "sumsetlab/cli.hpp"
#include "sumsetlab/core.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/hole_analysis.hpp"
#include "sumsetlab/pair_analysis.hpp"
#include "sumsetlab/report_json.hpp"
#include "sumsetlab/set_io.hpp"
#include "sumsetlab/verifier.hpp"
