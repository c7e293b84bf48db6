// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qcs {

/// Scaled complementary error function exp(x^2) * erfc(x).
/// Stable for large positive x where erfc underflows and exp overflows.
double erfcx(double x);

} // namespace qcs
