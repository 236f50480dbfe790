#pragma once

#include <vector>

#include "hardylab/ergolab/observable.hpp"

namespace hardylab::ergolab {

struct SeminormSchedule {
  std::vector<long> H;  // H_1, ..., H_{s-1} for the nested averages
  long default_H = 512;
  long h_at(int level) const {
    if (level < static_cast<int>(H.size())) return H[static_cast<size_t>(level)];
    return default_H;
  }
};

struct SeminormEstimate {
  int s = 1;
  double value = 0.0;
  // doubling-sensitivity diagnostic: relative change when every H halves
  double sensitivity = 0.0;
  bool schedule_too_small = false;  // sensitivity beyond 10%
};

// Finite approximation of the uniformity seminorm: the recursion
//   |f|_{s+1}^{2^{s+1}} = E_{0<=h<=H_s} |conj(f) T^h f|_s^{2^s}
// with the innermost mean exact in the character algebra: |g|_1 = |integral g|.
SeminormEstimate hk_seminorm_approx(const SystemSpec& sys, const CharacterObservable& f,
                                    int s, const SeminormSchedule& schedule = {});

// Closed-form reference for ergodic rotations, s >= 2:
//   (sum_k |c_k|^{2^s})^{1/2^s}.
// A derived oracle: cross-validated against hk_seminorm_approx before use.
double hk_character_oracle(const SystemSpec& rotation, const CharacterObservable& f, int s);

// |conj(f) tensor f|_{s, TxT} on the product rotation.
SeminormEstimate hk_tensor_seminorm(const SystemSpec& sys, const CharacterObservable& f,
                                    int s, const SeminormSchedule& schedule = {});

}  // namespace hardylab::ergolab
