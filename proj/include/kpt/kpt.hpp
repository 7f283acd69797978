#pragma once

#include "kpt/error.hpp"
#include "kpt/numeric.hpp"
#include "kpt/scalar.hpp"
#include "kpt/sequence.hpp"
#include "kpt/sums.hpp"
#include "kpt/polynomial.hpp"
#include "kpt/dense_matrix.hpp"
#include "kpt/circulant.hpp"
#include "kpt/spectral.hpp"
#include "kpt/invertibility.hpp"
#include "kpt/fft.hpp"
#include "kpt/fastops.hpp"
#include "kpt/version.hpp"
