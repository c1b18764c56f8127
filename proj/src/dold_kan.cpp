#include "fdg/dold_kan.hpp"

#include "fdg/errors.hpp"
#include "fdg/hom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fdg {

MonotoneMap::MonotoneMap(std::size_t n, std::vector<std::size_t> values) : target_(n), values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("monotone map needs a nonempty domain");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > n)
            throw std::invalid_argument("monotone map value out of range");
        if (i > 0 && values_[i] < values_[i - 1])
            throw std::invalid_argument("monotone map is not order-preserving");
    }
}

MonotoneMap MonotoneMap::identity(std::size_t n)
{
    std::vector<std::size_t> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        v[i] = i;
    return MonotoneMap(n, std::move(v));
}

bool MonotoneMap::is_surjective() const
{
    return values_.front() == 0 && values_.back() == target_ &&
           std::adjacent_find(values_.begin(), values_.end(),
                              [](std::size_t a, std::size_t b) { return b > a + 1; }) == values_.end();
}

bool MonotoneMap::is_injective() const
{
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

MonotoneMap compose(const MonotoneMap& b, const MonotoneMap& a)
{
    if (a.target() != b.source())
        throw ShapeMismatch("compose: monotone maps do not compose");
    std::vector<std::size_t> v;
    for (std::size_t x : a.values())
        v.push_back(b(x));
    return MonotoneMap(b.target(), std::move(v));
}

MonotoneMap coface(std::size_t n, std::size_t i)
{
    if (n == 0 || i > n)
        throw std::invalid_argument("coface index out of range");
    std::vector<std::size_t> v;
    for (std::size_t x = 0; x < n; ++x)
        v.push_back(x < i ? x : x + 1);
    return MonotoneMap(n, std::move(v));
}

MonotoneMap codegeneracy(std::size_t n, std::size_t j)
{
    if (j > n)
        throw std::invalid_argument("codegeneracy index out of range");
    std::vector<std::size_t> v;
    for (std::size_t x = 0; x <= n + 1; ++x)
        v.push_back(x <= j ? x : x - 1);
    return MonotoneMap(n, std::move(v));
}

std::vector<MonotoneMap> surjections(std::size_t n, std::size_t p)
{
    std::vector<MonotoneMap> out;
    if (p > n)
        return out;
    // A surjection is determined by the p positions k in 1..n where the value steps up.
    std::vector<bool> step(n, false);
    std::fill(step.end() - static_cast<long>(p), step.end(), true);
    do {
        std::vector<std::size_t> v{0};
        for (std::size_t k = 0; k < n; ++k)
            v.push_back(v.back() + (step[k] ? 1 : 0));
        out.emplace_back(p, std::move(v));
    } while (std::next_permutation(step.begin(), step.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<MonotoneMap, MonotoneMap> epi_monic_factorization(const MonotoneMap& alpha)
{
    std::vector<std::size_t> image;
    for (std::size_t x : alpha.values())
        if (image.empty() || image.back() != x)
            image.push_back(x);
    std::vector<std::size_t> epi;
    for (std::size_t x : alpha.values())
        epi.push_back(static_cast<std::size_t>(std::lower_bound(image.begin(), image.end(), x) - image.begin()));
    const std::size_t q = image.size() - 1;
    return {MonotoneMap(q, std::move(epi)), MonotoneMap(alpha.target(), std::move(image))};
}

SimplicialVS::SimplicialVS(std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> faces,
                           std::vector<std::vector<Matrix>> degeneracies)
    : dims_(std::move(dims)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies))
{
    if (dims_.empty())
        dims_.push_back(0);
    const std::size_t L = dims_.size() - 1;
    if (faces_.size() != L || degeneracies_.size() != L)
        throw ShapeMismatch("simplicial object: wrong number of face or degeneracy levels");
    for (std::size_t n = 1; n <= L; ++n) {
        if (faces_[n - 1].size() != n + 1)
            throw ShapeMismatch("simplicial object: level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                " faces");
        for (const auto& f : faces_[n - 1])
            if (f.rows() != dims_[n - 1] || f.cols() != dims_[n])
                throw ShapeMismatch("simplicial object: face on level " + std::to_string(n) + " has the wrong shape");
    }
    for (std::size_t n = 0; n < L; ++n) {
        if (degeneracies_[n].size() != n + 1)
            throw ShapeMismatch("simplicial object: level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                " degeneracies");
        for (const auto& s : degeneracies_[n])
            if (s.rows() != dims_[n + 1] || s.cols() != dims_[n])
                throw ShapeMismatch("simplicial object: degeneracy on level " + std::to_string(n) +
                                    " has the wrong shape");
    }
}

bool check_simplicial_identities(const SimplicialVS& s)
{
    const std::size_t L = s.top_level();
    // d_i d_j = d_{j-1} d_i for i < j, on level n >= 2.
    for (std::size_t n = 2; n <= L; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (s.face(n - 1, i) * s.face(n, j) != s.face(n - 1, j - 1) * s.face(n, i))
                    return false;
    // s_i s_j = s_{j+1} s_i for i <= j, on level n with n + 2 <= L.
    for (std::size_t n = 0; n + 2 <= L; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i)
                if (s.degeneracy(n + 1, i) * s.degeneracy(n, j) != s.degeneracy(n + 1, j + 1) * s.degeneracy(n, i))
                    return false;
    // d_i s_j on level n (s_j : X_n -> X_{n+1}, d_i : X_{n+1} -> X_n).
    for (std::size_t n = 0; n + 1 <= L; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                const Matrix lhs = s.face(n + 1, i) * s.degeneracy(n, j);
                Matrix rhs;
                if (i == j || i == j + 1)
                    rhs = Matrix::identity(s.dim(n));
                else if (i < j)
                    rhs = s.degeneracy(n - 1, j - 1) * s.face(n, i);
                else
                    rhs = s.degeneracy(n - 1, j) * s.face(n, i - 1);
                if (lhs != rhs)
                    return false;
            }
    return true;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

struct Summand {
    std::size_t p;
    MonotoneMap eta;
    std::size_t offset;
};

struct Level {
    std::vector<Summand> summands;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    std::size_t dim = 0;
};

Level make_level(const Complex& v, std::size_t n)
{
    Level level;
    for (std::size_t p = 0; p <= n; ++p) {
        const std::size_t vp = chain_dim(v, static_cast<int>(p));
        if (vp == 0)
            continue;
        for (auto& eta : surjections(n, p)) {
            level.index[{p, eta.values()}] = level.summands.size();
            level.summands.push_back({p, std::move(eta), level.dim});
            level.dim += vp;
        }
    }
    return level;
}

/// K(alpha) : K_n -> K_m for alpha : [m] -> [n].
Matrix structure_map(const Complex& v, const Level& from, const Level& to, const MonotoneMap& alpha)
{
    Matrix out(to.dim, from.dim);
    for (const auto& s : from.summands) {
        const auto [epi, mono] = epi_monic_factorization(compose(s.eta, alpha));
        const std::size_t q = epi.target();
        const std::size_t vp = chain_dim(v, static_cast<int>(s.p));
        if (q == s.p) {
            const std::size_t row = to.summands[to.index.at({q, epi.values()})].offset;
            out.set_block(row, s.offset, Matrix::identity(vp));
        } else if (q + 1 == s.p && mono == coface(s.p, s.p)) {
            auto it = to.index.find({q, epi.values()});
            if (it == to.index.end())
                continue; // V_q = 0
            out.set_block(to.summands[it->second].offset, s.offset, boundary(v, static_cast<int>(s.p)));
        }
    }
    return out;
}

} // namespace

std::size_t denormalized_dim(const Complex& v, std::size_t n)
{
    std::size_t total = 0;
    for (std::size_t p = 0; p <= n; ++p)
        total += binomial(n, p) * chain_dim(v, static_cast<int>(p));
    return total;
}

SimplicialVS denormalize(const Complex& v, std::size_t L)
{
    if (!v.is_zero() && v.hi() > 0)
        throw NegativeSupport("denormalize: input has negative chain degrees");
    std::vector<Level> levels;
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= L; ++n) {
        levels.push_back(make_level(v, n));
        dims.push_back(levels.back().dim);
    }
    std::vector<std::vector<Matrix>> faces(L), degeneracies(L);
    for (std::size_t n = 1; n <= L; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            faces[n - 1].push_back(structure_map(v, levels[n], levels[n - 1], coface(n, i)));
    for (std::size_t n = 0; n < L; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            degeneracies[n].push_back(structure_map(v, levels[n], levels[n + 1], codegeneracy(n, j)));
    return SimplicialVS(std::move(dims), std::move(faces), std::move(degeneracies));
}

Complex normalize(const SimplicialVS& s)
{
    const std::size_t L = s.top_level();
    std::vector<Matrix> basis;
    for (std::size_t n = 0; n <= L; ++n) {
        if (n == 0 || s.dim(n) == 0) {
            basis.push_back(Matrix::identity(s.dim(n)));
            continue;
        }
        Matrix stacked(0, s.dim(n));
        for (std::size_t i = 0; i < n; ++i)
            stacked = vstack(stacked, s.face(n, i));
        basis.push_back(kernel_basis(stacked));
    }
    std::map<int, std::size_t> dims;
    std::map<int, Matrix> boundaries;
    for (std::size_t n = 0; n <= L; ++n)
        dims[static_cast<int>(n)] = basis[n].cols();
    for (std::size_t n = 1; n <= L; ++n) {
        if (basis[n].cols() == 0 || basis[n - 1].cols() == 0)
            continue;
        const Rational sign = n % 2 == 0 ? 1 : -1;
        auto coords = solve_linear(basis[n - 1], sign * (s.face(n, n) * basis[n]));
        if (!coords)
            throw NotAComplex("normalize: last face leaves the normalized subspace");
        boundaries[static_cast<int>(n)] = std::move(*coords);
    }
    return from_chain(dims, boundaries);
}

} // namespace fdg
