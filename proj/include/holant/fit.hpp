#ifndef HOLANT_FIT_HPP
#define HOLANT_FIT_HPP

namespace holant {

enum class FitStatus {
  ok,
  underdetermined,  // recurrence system does not pin down all parameters
  not_fibonacci,    // residual or parameter constraint fails
};

template <typename ParamsT>
struct FitResult {
  FitStatus status = FitStatus::underdetermined;
  ParamsT params{};        // valid when status == ok
  double residual = 0.0;   // ||A x - b|| of the stacked recurrence system
  int rank = 0;
};

}  // namespace holant

#endif
