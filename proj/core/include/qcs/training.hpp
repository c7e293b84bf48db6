// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qcs/rng.hpp"
#include "qcs/types.hpp"

namespace qcs {

enum class TrainingKind { ShiftedZC, Golay, IidQpsk, IidGaussian };

const char* training_kind_name(TrainingKind kind);
TrainingKind parse_training_kind(const std::string& name); // zc|golay|qpsk|gauss

/// Zadoff-Chu base sequence scaled to per-antenna power P_t/N_t:
/// t[k] = sqrt(P_t/N_t) * exp(j*pi*k(k+1)/N_p) for odd N_p, exp(j*pi*k^2/N_p)
/// for even N_p.
CVec zc_sequence(int n_pilot, double total_power, int n_tx);

/// Golay complementary pair of +-1 sequences (Rudin-Shapiro recursion);
/// length must be a power of two.
std::pair<std::vector<int>, std::vector<int>> golay_pair(int length);

/// Training block T (N_t x N_p). For the shifted designs (ShiftedZC, Golay)
/// row n is the nL-place circular shift of a base sequence and T is kept
/// implicit; the IID designs store T explicitly.
struct TrainingMatrix {
  TrainingKind kind = TrainingKind::ShiftedZC;
  int n_tx = 0;
  int n_pilot = 0;
  int delay_taps = 0;  // L used for the row-shift layout
  double power = 1.0;  // total transmit power P_t
  CVec base;           // base row t (structured kinds only)
  CMat rows;           // explicit T (IID kinds only)

  bool structured() const {
    return kind == TrainingKind::ShiftedZC || kind == TrainingKind::Golay;
  }
  /// Materializes T.
  CMat dense() const;
  double frob_norm_sq() const;
};

/// Builds a training matrix. ShiftedZC requires N_t*L | N_p; Golay requires
/// N_p to be a power of two. The rng is consumed only by the IID kinds.
TrainingMatrix build_training(TrainingKind kind, int n_pilot, int n_tx, int delay_taps,
                              double total_power, Rng& rng);

/// M * J_ell: columns circularly delayed by ell.
CMat shift_columns(const CMat& m, int ell);

struct StackedTraining {
  CMat t_tilde;              // [T J_0; T J_1; ...; T J_{L-1}], (N_t L) x N_p
  std::vector<int> row_perm; // pi with T_bar row k = T_tilde row pi(k)
};

/// Stacks the circulant-delayed blocks and returns the row reordering that
/// turns T_tilde into the shift-ordered T_bar (rows = consecutive circular
/// shifts of the base sequence for the structured designs).
StackedTraining stacked_blocks(const TrainingMatrix& training, int delay_taps);

} // namespace qcs
