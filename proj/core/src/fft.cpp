// SPDX-License-Identifier: Apache-2.0
#include "qcs/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qcs::dft {

// FFTW planning is not thread-safe; execution via fftw_execute_dft is.
static std::mutex& planner_mutex() {
  static std::mutex mtx;
  return mtx;
}

BatchPlan::BatchPlan(std::vector<int> dims, int howmany) {
  if (dims.empty() || howmany < 1) throw std::invalid_argument("BatchPlan: bad shape");
  const int n = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
  std::vector<cd> scratch(static_cast<size_t>(n) * howmany);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_ = fftw_plan_many_dft(static_cast<int>(dims.size()), dims.data(), howmany,
                            buf, nullptr, 1, n, buf, nullptr, 1, n,
                            FFTW_FORWARD, flags);
  bwd_ = fftw_plan_many_dft(static_cast<int>(dims.size()), dims.data(), howmany,
                            buf, nullptr, 1, n, buf, nullptr, 1, n,
                            FFTW_BACKWARD, flags);
  if (!fwd_ || !bwd_) throw std::runtime_error("BatchPlan: fftw planning failed");
}

BatchPlan::~BatchPlan() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void BatchPlan::forward(cd* data) const {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), buf, buf);
}

void BatchPlan::backward(cd* data) const {
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(bwd_), buf, buf);
}

const BatchPlan& plan(const std::vector<int>& dims, int howmany) {
  using Key = std::pair<std::vector<int>, int>;
  static std::map<Key, std::unique_ptr<BatchPlan>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[{dims, howmany}];
  if (!slot) slot = std::make_unique<BatchPlan>(dims, howmany);
  return *slot;
}

void left_b(const ArrayGeometry& g, CMat& m, bool adjoint) {
  if (m.rows() != g.size()) throw std::invalid_argument("left_b: row count mismatch");
  if (m.cols() == 0) return;
  const auto& p = plan({g.cols_azim, g.rows_elev}, static_cast<int>(m.cols()));
  if (adjoint)
    p.backward(m.data());
  else
    p.forward(m.data());
  m *= 1.0 / std::sqrt(static_cast<double>(g.size()));
}

void right_b(const ArrayGeometry& g, CMat& m, bool adjoint) {
  if (m.cols() != g.size()) throw std::invalid_argument("right_b: column count mismatch");
  // DFT matrices are symmetric, so row-wise products reduce to column-wise
  // products on the transpose: (M B)^T = B M^T and (M B^*)^T = conj(B) M^T,
  // with conj(B) v = backward(v)/sqrt(N).
  CMat mt = m.transpose();
  left_b(g, mt, adjoint);
  m = mt.transpose();
}

} // namespace qcs::dft
