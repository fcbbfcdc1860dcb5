#pragma once

#include "utccs/audit.hpp"
#include "utccs/cbprng.hpp"
#include "utccs/chaos_metrics.hpp"
#include "utccs/cipher.hpp"
#include "utccs/core_maps.hpp"
#include "utccs/csv.hpp"
#include "utccs/image.hpp"
#include "utccs/pnm.hpp"
