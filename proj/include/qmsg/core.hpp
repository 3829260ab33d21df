#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace qmsg {

using complexd = std::complex<double>;

// Tolerances used by validation and analysis. Fixed at build time; the CLI
// reports them verbatim so results are interpretable downstream.
namespace tol {
inline constexpr double norm = 1e-9;        // state / letter normalization
inline constexpr double orth = 1e-9;        // pairwise orthonormality
inline constexpr double prob = 1e-9;        // probability vectors summing to one
inline constexpr double trace = 1e-9;       // unit-trace checks
inline constexpr double psd = 1e-9;         // allowed negative-eigenvalue slack
inline constexpr double recon = 1e-8;       // spectral reconstruction error
inline constexpr double herm = 1e-10;       // Hermiticity defect of internal matrices
inline constexpr double herm_input = 1e-8;  // max asymmetry accepted from user files
inline constexpr double rank = 1e-10;       // numerical-rank threshold
inline constexpr double amp = 1e-12;        // sparse amplitudes at or below this are dropped
inline constexpr double eig = 1e-12;        // eigenvalues at or below this count as zero
inline constexpr double block = 1e-10;      // off-block weight for block-diagonality
inline constexpr double imag = 1e-9;        // residual imaginary part of real expectations
}  // namespace tol

// Dense operators and message matrices are capped at this dimension.
// Diagonal observables and sparse states have no such cap.
inline constexpr std::uint64_t dense_cap = 4096;

// Input that is syntactically broken (bad JSON, missing keys, wrong types).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that parses but violates a contract (norms, probabilities, shapes).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds the dense-dimension or enumeration caps.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmsg
