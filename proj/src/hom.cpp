#include "fdg/hom.hpp"

#include "fdg/errors.hpp"

namespace fdg {

Complex from_chain(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& boundaries)
{
    std::map<int, std::size_t> cdims;
    for (const auto& [n, k] : dims)
        cdims[-n] = k;
    std::map<int, Matrix> d;
    for (const auto& [n, m] : boundaries)
        d[-n] = m;
    return Complex::make(cdims, d);
}

std::vector<HomSlot> hom_slots(const Complex& m, const Complex& n, int k)
{
    std::vector<HomSlot> slots;
    std::size_t offset = 0;
    for (int a = m.lo(); a <= m.hi(); ++a) {
        const std::size_t rows = n.dim(a + k);
        const std::size_t cols = m.dim(a);
        if (rows == 0 || cols == 0)
            continue;
        slots.push_back({a, offset, rows, cols});
        offset += rows * cols;
    }
    return slots;
}

std::size_t hom_dim(const Complex& m, const Complex& n, int k)
{
    std::size_t total = 0;
    for (const auto& s : hom_slots(m, n, k))
        total += s.rows * s.cols;
    return total;
}

Matrix pack_graded_map(const Complex& m, const Complex& n, int k, const std::map<int, Matrix>& family)
{
    Matrix flat(hom_dim(m, n, k), 1);
    for (const auto& s : hom_slots(m, n, k)) {
        auto it = family.find(s.source_degree);
        if (it == family.end())
            continue;
        if (it->second.rows() != s.rows || it->second.cols() != s.cols)
            throw ShapeMismatch("pack_graded_map: component shape mismatch");
        for (std::size_t i = 0; i < s.rows; ++i)
            for (std::size_t j = 0; j < s.cols; ++j)
                flat(s.offset + i * s.cols + j, 0) = it->second(i, j);
    }
    return flat;
}

std::map<int, Matrix> unpack_graded_map(const Complex& m, const Complex& n, int k, const Matrix& flat)
{
    if (flat.rows() != hom_dim(m, n, k) || flat.cols() != 1)
        throw ShapeMismatch("unpack_graded_map: wrong vector length");
    std::map<int, Matrix> family;
    for (const auto& s : hom_slots(m, n, k)) {
        Matrix f(s.rows, s.cols);
        for (std::size_t i = 0; i < s.rows; ++i)
            for (std::size_t j = 0; j < s.cols; ++j)
                f(i, j) = flat(s.offset + i * s.cols + j, 0);
        family[s.source_degree] = std::move(f);
    }
    return family;
}

std::map<int, Matrix> hom_differential(const Complex& m, const Complex& n, int k,
                                       const std::map<int, Matrix>& family)
{
    auto component = [&](int a) {
        auto it = family.find(a);
        return it == family.end() ? Matrix(n.dim(a + k), m.dim(a)) : it->second;
    };
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    std::map<int, Matrix> out;
    for (int a = m.lo(); a <= m.hi(); ++a) {
        if (n.dim(a + k + 1) == 0)
            continue;
        Matrix value = n.d(a + k).empty() ? Matrix(n.dim(a + k + 1), m.dim(a)) : n.d(a + k) * component(a);
        if (!m.d(a).empty())
            value -= sign * (component(a + 1) * m.d(a));
        out[a] = std::move(value);
    }
    return out;
}

Complex hom_complex(const Complex& m, const Complex& n)
{
    if (m.is_zero() || n.is_zero())
        return {};
    const int lo = n.lo() - m.hi();
    const int hi = n.hi() - m.lo();
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int k = lo; k <= hi; ++k)
        dims[k] = hom_dim(m, n, k);
    for (int k = lo; k < hi; ++k) {
        const std::size_t cols = dims[k];
        Matrix dk(dims[k + 1], cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Matrix unit(cols, 1);
            unit(j, 0) = 1;
            const auto image = hom_differential(m, n, k, unpack_graded_map(m, n, k, unit));
            dk.set_block(0, j, pack_graded_map(m, n, k + 1, image));
        }
        d[k] = std::move(dk);
    }
    return Complex::make(dims, d);
}

std::size_t ext_dim(const Complex& m, const Complex& n, int i)
{
    return cohomology_dim(hom_complex(m, n), i);
}

std::size_t semisimple_ext_oracle(const Complex& m, const Complex& n, int i)
{
    std::size_t total = 0;
    for (int a = m.lo(); a <= m.hi(); ++a)
        total += cohomology_dim(m, a) * cohomology_dim(n, a + i);
    return total;
}

Complex truncate_nonneg(const Complex& chain)
{
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> d;
    for (int n = chain.lo(); n < 0; ++n)
        dims[n] = chain.dim(n);
    for (int n = chain.lo(); n < -1; ++n)
        d[n] = chain.d(n);
    if (chain.dim(0) > 0) {
        const Matrix cycles = chain.d(0).empty() ? Matrix::identity(chain.dim(0)) : kernel_basis(chain.d(0));
        dims[0] = cycles.cols();
        if (chain.dim(-1) > 0)
            d[-1] = *solve_linear(cycles, chain.d(-1));
    }
    return Complex::make(dims, d);
}

} // namespace fdg
