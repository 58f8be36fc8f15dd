#pragma once

#include <string_view>

namespace mixspin {

// Which engine produced a result.
//   Canonical - stabilized closed form over the unified (J, B, T) parameterization
//   Published - the element formulas exactly as printed for each coupling law
//   Oracle    - brute-force 6x6 matrix pipeline
enum class EvalMode { Canonical, Published, Oracle };

std::string_view to_string(EvalMode mode);
EvalMode parse_eval_mode(std::string_view name);

struct NegativityResult {
  double negativity = 0.0;
  // Negative eigenvalue mass attributed to the {|-1/2,-1>, |1/2,0>} and
  // {|-1/2,0>, |1/2,1>} partial-transpose blocks. Both are <= 0.
  double neg_block_12 = 0.0;
  double neg_block_56 = 0.0;
  EvalMode mode = EvalMode::Canonical;
};

}  // namespace mixspin
