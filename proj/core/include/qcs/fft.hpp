// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qcs/geometry.hpp"
#include "qcs/types.hpp"

namespace qcs::dft {

/// Batched in-place complex DFT, unnormalized (FFTW sign convention:
/// forward = exp(-j2pi..), backward = exp(+j2pi..)). `dims` is {n} for rank-1
/// transforms or {cols_azim, rows_elev} for UPA-shaped vectors stored with the
/// elevation index contiguous. Plans are cached for the process lifetime;
/// execution on distinct buffers is thread-safe.
class BatchPlan {
 public:
  BatchPlan(std::vector<int> dims, int howmany);
  ~BatchPlan();
  BatchPlan(const BatchPlan&) = delete;
  BatchPlan& operator=(const BatchPlan&) = delete;

  void forward(cd* data) const;
  void backward(cd* data) const;

 private:
  void* fwd_ = nullptr;
  void* bwd_ = nullptr;
};

const BatchPlan& plan(const std::vector<int>& dims, int howmany);

/// m <- B m (adjoint=false) or B^* m (adjoint=true), where B is the unitary
/// 2-D DFT steering basis of geometry g and each column of m is one flattened
/// array vector. m must have g.size() rows.
void left_b(const ArrayGeometry& g, CMat& m, bool adjoint);

/// m <- m B or m B^*; each row of m is one flattened array vector, so m must
/// have g.size() columns. Uses the symmetry of DFT matrices.
void right_b(const ArrayGeometry& g, CMat& m, bool adjoint);

} // namespace qcs::dft
