#pragma once

#include "fdg/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace fdg {

/// Bounded cochain complex of finite-dimensional Q-vector spaces.
///
/// d(n) : C^n -> C^{n+1} has shape dim(n+1) x dim(n).  The support [lo, hi] is trimmed to the
/// outermost nonzero degrees; the zero complex has lo() > hi().
///
/// Chain-indexed complexes (HOM complexes, Dold-Kan inputs) use the same type with chain degree n
/// stored in cohomological degree -n, so the boundary C_n -> C_{n-1} is d(-n).
class Complex {
public:
    Complex() = default;

    /// Validates shapes and d^2 = 0. Differentials not listed are zero.
    static Complex make(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& differentials);

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return hi_; }
    bool is_zero() const noexcept { return lo_ > hi_; }
    std::size_t total_dim() const;

    std::size_t dim(int n) const noexcept;
    const Matrix& d(int n) const;

    std::map<int, std::size_t> dims() const;

    friend bool operator==(const Complex& a, const Complex& b) = default;

private:
    int lo_ = 0;
    int hi_ = -1;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_; ///< d_[k] = d(lo_ - 1 + k), k in [0, hi_ - lo_ + 1]
};

Complex make_complex(const std::map<int, std::size_t>& dims, const std::map<int, Matrix>& differentials);

enum class GeneratorKind { disk, sphere };

/// D(n) with the given multiplicity in degrees n, n+1 (identity differential), or S(n) in degree n.
Complex generator(GeneratorKind kind, int n, std::size_t multiplicity = 1);
inline Complex disk(int n, std::size_t multiplicity = 1) { return generator(GeneratorKind::disk, n, multiplicity); }
inline Complex sphere(int n, std::size_t multiplicity = 1) { return generator(GeneratorKind::sphere, n, multiplicity); }

/// shift(m, k)^j = m^{j+k}, same differential.
Complex shift(const Complex& m, int k);
/// (Sigma m)^n = m^{n+1} with differential -d.
Complex suspension(const Complex& m);
Complex direct_sum(const Complex& a, const Complex& b);
/// Transports the differential along degreewise isomorphisms t(n) : C^n -> C'^n: d' = t d t^{-1}.
Complex conjugate(const Complex& c, const std::map<int, Matrix>& iso);
/// Complexes over a field are isomorphic iff their dimensions and differential ranks agree.
bool is_isomorphic(const Complex& a, const Complex& b);

/// Degreewise matrices f(n) : source^n -> target^n commuting with the differentials.
class ChainMap {
public:
    ChainMap() = default;
    /// Validates shapes and f d = d f. Components not listed are zero.
    static ChainMap make(Complex source, Complex target, const std::map<int, Matrix>& components);
    static ChainMap identity(const Complex& c);
    static ChainMap zero(Complex source, Complex target);

    const Complex& source() const noexcept { return source_; }
    const Complex& target() const noexcept { return target_; }
    /// Union of both supports.
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return hi_; }
    const Matrix& at(int n) const;
    std::map<int, Matrix> components() const;

    friend bool operator==(const ChainMap& a, const ChainMap& b) = default;

private:
    Complex source_;
    Complex target_;
    int lo_ = 0;
    int hi_ = -1;
    std::vector<Matrix> f_;
};

/// Reindexes source, target and components like shift(Complex, k).
ChainMap shift(const ChainMap& f, int k);

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap operator*(const Rational& s, const ChainMap& f);
ChainMap direct_sum(const ChainMap& a, const ChainMap& b);
/// Inclusion of the first / second summand of direct_sum(a, b), and the two projections.
ChainMap inclusion_first(const Complex& a, const Complex& b);
ChainMap inclusion_second(const Complex& a, const Complex& b);
ChainMap projection_first(const Complex& a, const Complex& b);
ChainMap projection_second(const Complex& a, const Complex& b);

/// cone^n = source^{n+1} (+) target^n with differential blocks (-d_src, 0; f, d_tgt).
Complex cone(const ChainMap& f);

bool is_degreewise_injective(const ChainMap& f);
bool is_degreewise_surjective(const ChainMap& f);

/// Subcomplex ker f, returned as its inclusion into the source.
ChainMap kernel_inclusion(const ChainMap& f);
/// Quotient complex coker f, returned as the projection from the target.
ChainMap cokernel_projection(const ChainMap& f);
/// Subcomplex spanned degreewise by the columns of `spanning` (which must be d-stable),
/// returned as an injective chain map into c. Redundant columns are dropped.
ChainMap subcomplex_inclusion(const Complex& c, const std::map<int, Matrix>& spanning);

struct CohomologyReport {
    std::map<int, std::size_t> dims;          ///< every degree in the support of the complex
    std::map<int, Matrix> representatives;    ///< columns: cocycles whose classes form a basis of H^n
    std::size_t dim(int n) const;
};

CohomologyReport cohomology(const Complex& c);
std::size_t cohomology_dim(const Complex& c, int n);
bool is_acyclic(const Complex& c);

/// Matrix of H^n(f) with respect to the representative bases of `cohomology`.
Matrix induced_on_cohomology(const ChainMap& f, int n);
/// Coordinates of the classes of the given cocycle columns in the representative basis of H^n(c).
Matrix cohomology_coordinates(const Complex& c, int n, const Matrix& cocycles);

bool is_quasi_iso(const ChainMap& f);

} // namespace fdg
