#include "snlab/types.hpp"

#include <cmath>
#include <stdexcept>

#include "snlab/config.hpp"

namespace snlab {

const Config& config() {
    static const Config cfg;
    return cfg;
}

const char* to_string(Norm n) {
    switch (n) {
        case Norm::linf: return "linf";
        case Norm::l1: return "l1";
        case Norm::l2: return "l2";
    }
    return "?";
}

Norm norm_from_string(const std::string& s) {
    if (s == "linf") return Norm::linf;
    if (s == "l1") return Norm::l1;
    if (s == "l2") return Norm::l2;
    throw std::invalid_argument("unknown norm tag: " + s);
}

Norm dual(Norm n) {
    switch (n) {
        case Norm::linf: return Norm::l1;
        case Norm::l1: return Norm::linf;
        case Norm::l2: return Norm::l2;
    }
    throw std::invalid_argument("bad norm tag");
}

Matrix Matrix::create(int rows, int cols, std::vector<cx> entries, Norm domain,
                      Norm codomain) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    if (entries.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    for (const cx& z : entries)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("matrix entries must be finite");
    Matrix m;
    m.rows = rows;
    m.cols = cols;
    m.domain = domain;
    m.codomain = codomain;
    m.entries = std::move(entries);
    return m;
}

Matrix Matrix::zero(int rows, int cols, Norm domain, Norm codomain) {
    return create(rows, cols, std::vector<cx>(static_cast<size_t>(rows) * cols),
                  domain, codomain);
}

Matrix Matrix::identity(int n, Norm domain, Norm codomain) {
    Matrix m = zero(n, n, domain, codomain);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

}  // namespace snlab
