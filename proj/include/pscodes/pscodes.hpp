// Umbrella header.
#pragma once

#include "bch.hpp"
#include "channel.hpp"
#include "compositions.hpp"
#include "dominance.hpp"
#include "galois.hpp"
#include "grs.hpp"
#include "multi_recon.hpp"
#include "oracle.hpp"
#include "outcome.hpp"
#include "phi.hpp"
#include "scheme.hpp"
#include "single_recon.hpp"
#include "sweep.hpp"
