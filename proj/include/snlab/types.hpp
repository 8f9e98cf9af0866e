#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace snlab {

using cx = std::complex<double>;

// Sequence geometry tag. Carried by matrices so operator norms and duality
// are always computed against the declared geometry.
enum class Norm { linf, l1, l2 };

const char* to_string(Norm n);
Norm norm_from_string(const std::string& s);
Norm dual(Norm n);

// Dense complex matrix, row-major, with declared domain/codomain norms.
// The norm tags are set at construction and treated as immutable.
struct Matrix {
    int rows = 0;
    int cols = 0;
    Norm domain = Norm::l2;
    Norm codomain = Norm::l2;
    std::vector<cx> entries;  // row-major, rows*cols, all finite

    static Matrix create(int rows, int cols, std::vector<cx> entries,
                         Norm domain, Norm codomain);
    static Matrix zero(int rows, int cols, Norm domain, Norm codomain);
    static Matrix identity(int n, Norm domain, Norm codomain);

    cx& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const cx& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * cols + j];
    }
};

// Nonincreasing sequence of nonnegative singular numbers.
struct SingularSpectrum {
    std::vector<double> values;
};

// Complex eigenvalues with multiplicity, sorted by nonincreasing modulus.
struct EigenSpectrum {
    std::vector<cx> values;
};

using CoefficientSequence = std::vector<cx>;

}  // namespace snlab
