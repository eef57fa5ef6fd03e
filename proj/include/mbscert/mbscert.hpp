#pragma once

#include "mbscert/core.hpp"
#include "mbscert/linalg.hpp"
#include "mbscert/povm.hpp"
#include "mbscert/data.hpp"
#include "mbscert/mbs.hpp"
#include "mbscert/game.hpp"
#include "mbscert/discrimination.hpp"
#include "mbscert/seesaw.hpp"
#include "mbscert/moment.hpp"
#include "mbscert/sdp.hpp"
#include "mbscert/stats.hpp"
#include "mbscert/photonics.hpp"
#include "mbscert/io.hpp"
#include "mbscert/cli.hpp"
