#pragma once

#include "svdkit/core.hpp"
#include "svdkit/eig.hpp"
#include "svdkit/einsum.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/io.hpp"
#include "svdkit/metrics.hpp"
#include "svdkit/mps.hpp"
#include "svdkit/random.hpp"
#include "svdkit/schmidt.hpp"
#include "svdkit/svd.hpp"
#include "svdkit/tensor.hpp"
#include "svdkit/truncation.hpp"
