#pragma once

#include "expand.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "schlicht.hpp"
#include "series.hpp"
#include "symfun.hpp"
#include "symmetric.hpp"
#include "verify.hpp"
#include "virasoro.hpp"
