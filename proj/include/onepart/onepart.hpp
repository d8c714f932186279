#pragma once

#include "onepart/appendix_data.hpp"
#include "onepart/exact.hpp"
#include "onepart/factor_oracle.hpp"
#include "onepart/hurwitz.hpp"
#include "onepart/moduli.hpp"
#include "onepart/partitions.hpp"
#include "onepart/relations.hpp"
#include "onepart/series.hpp"
