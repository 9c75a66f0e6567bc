#pragma once

#include "latcount/bernoulli.hpp"
#include "latcount/bigint.hpp"
#include "latcount/coefficients.hpp"
#include "latcount/engines.hpp"
#include "latcount/faulhaber.hpp"
#include "latcount/identities.hpp"
#include "latcount/rational.hpp"
#include "latcount/verify.hpp"
