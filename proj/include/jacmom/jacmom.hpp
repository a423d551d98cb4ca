#pragma once

#include "jacmom/bivar_poly.hpp"
#include "jacmom/cli.hpp"
#include "jacmom/coefficients.hpp"
#include "jacmom/combinatorics.hpp"
#include "jacmom/dpoly.hpp"
#include "jacmom/errors.hpp"
#include "jacmom/exppoly.hpp"
#include "jacmom/hypergeo.hpp"
#include "jacmom/io.hpp"
#include "jacmom/mc.hpp"
#include "jacmom/moments.hpp"
#include "jacmom/params.hpp"
#include "jacmom/rational.hpp"
#include "jacmom/symmetric.hpp"
#include "jacmom/verify.hpp"
#include "jacmom/version.hpp"
