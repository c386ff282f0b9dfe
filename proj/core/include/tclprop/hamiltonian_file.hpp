#pragma once

#include <string>

#include "tclprop/models.hpp"

namespace tclprop {

// Loads a Hamiltonian from a structured text file:
//
//   # comments and blank lines are ignored
//   dim 2
//   term 1.0 0.0
//   0,0  1,0
//   1,0  0,0
//   term 0.5 0.0 harmonic 1.3
//   ...
//
// Each `term <re> <im> [harmonic <w>]` line is followed by dim rows of dim
// comma-separated re,im entries. The assembled Hamiltonian is
// H(t) = sum_k c_k exp(i w_k t) M_k. Parse failures report the line number.
TimeDependentHamiltonian load_custom_hamiltonian(const std::string& path);

} // namespace tclprop
