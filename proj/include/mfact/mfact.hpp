#pragma once

#include "mfact/action.hpp"
#include "mfact/chain.hpp"
#include "mfact/error.hpp"
#include "mfact/parking.hpp"
#include "mfact/permutation.hpp"
#include "mfact/surjection.hpp"
#include "mfact/text_io.hpp"
