#include "fdg/serialize.hpp"

#include "fdg/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace fdg {

namespace {

std::string child(const std::string& path, const std::string& key)
{
    return path + "/" + key;
}

std::string child(const std::string& path, std::size_t index)
{
    return path + "/" + std::to_string(index);
}

std::string located(const std::string& path, const char* what)
{
    return (path.empty() ? std::string("/") : path) + ": " + what;
}

/// Re-raises construction errors with the JSON path of the offending object.
template <typename F>
auto with_location(const std::string& path, F&& build)
{
    try {
        return build();
    } catch (const SchemaError&) {
        throw;
    } catch (const NotAComplex& e) {
        throw NotAComplex(located(path, e.what()));
    } catch (const NotAChainMap& e) {
        throw NotAChainMap(located(path, e.what()));
    } catch (const NotAFiltration& e) {
        throw NotAFiltration(located(path, e.what()));
    } catch (const NotAGradedModule& e) {
        throw NotAGradedModule(located(path, e.what()));
    } catch (const ShapeMismatch& e) {
        throw ShapeMismatch(located(path, e.what()));
    }
}

const Json& field(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        throw SchemaError(path.empty() ? "/" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(child(path, key), "missing field");
    return *it;
}

const Json* optional_field(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        throw SchemaError(path.empty() ? "/" : path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::size_t natural(const Json& j, const std::string& path)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw SchemaError(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const Json& array(const Json& j, const std::string& path)
{
    if (!j.is_array())
        throw SchemaError(path, "expected an array");
    return j;
}

int degree_key(const std::string& key, const std::string& path)
{
    int value = 0;
    const char* first = key.data();
    const char* last = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (key.empty() || ec != std::errc() || ptr != last)
        throw SchemaError(child(path, key), "degree keys must be decimal integers");
    return value;
}

Rational rational_from_json(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw SchemaError(path, "expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw SchemaError(path, "malformed rational '" + j.get<std::string>() + "'");
    }
}

Json degree_table(const std::map<int, Matrix>& table)
{
    Json out = Json::object();
    for (const auto& [n, m] : table)
        out[std::to_string(n)] = matrix_to_json(m);
    return out;
}

std::map<int, Matrix> components_table(const Json& j, const Complex& source, const Complex& target,
                                       const std::string& path)
{
    if (!j.is_object())
        throw SchemaError(path, "expected an object keyed by degree");
    std::map<int, Matrix> out;
    for (const auto& [key, value] : j.items()) {
        const int n = degree_key(key, path);
        out[n] = matrix_from_json(value, target.dim(n), source.dim(n), child(path, key));
    }
    return out;
}

} // namespace

Json rational_to_json(const Rational& q)
{
    // mpq_class(p, q) does not reduce on its own.
    Rational r = q;
    r.canonicalize();
    return to_string(r);
}

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    array(j, path);
    if (j.size() != rows)
        throw SchemaError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = array(j[i], child(path, i));
        if (row.size() != cols)
            throw SchemaError(child(path, i),
                              "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = rational_from_json(row[c], child(child(path, i), c));
    }
    return m;
}

Json to_json(const Complex& c)
{
    Json degrees = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n)
        if (c.dim(n) > 0)
            degrees[std::to_string(n)] = c.dim(n);
    Json d = Json::object();
    for (int n = c.lo(); n < c.hi(); ++n)
        if (c.dim(n) > 0 && c.dim(n + 1) > 0)
            d[std::to_string(n)] = matrix_to_json(c.d(n));
    return Json{{"degrees", std::move(degrees)}, {"d", std::move(d)}};
}

Complex complex_from_json(const Json& j, const std::string& path)
{
    const Json& degrees = field(j, "degrees", path);
    if (!degrees.is_object())
        throw SchemaError(child(path, "degrees"), "expected an object keyed by degree");
    std::map<int, std::size_t> dims;
    for (const auto& [key, value] : degrees.items())
        dims[degree_key(key, child(path, "degrees"))] = natural(value, child(child(path, "degrees"), key));
    auto dim = [&](int n) {
        auto it = dims.find(n);
        return it == dims.end() ? std::size_t{0} : it->second;
    };
    std::map<int, Matrix> d;
    if (const Json* dj = optional_field(j, "d", path)) {
        if (!dj->is_object())
            throw SchemaError(child(path, "d"), "expected an object keyed by degree");
        for (const auto& [key, value] : dj->items()) {
            const int n = degree_key(key, child(path, "d"));
            d[n] = matrix_from_json(value, dim(n + 1), dim(n), child(child(path, "d"), key));
        }
    }
    return with_location(path, [&] { return Complex::make(dims, d); });
}

Json components_to_json(const ChainMap& f)
{
    std::map<int, Matrix> table;
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (f.source().dim(n) > 0 && f.target().dim(n) > 0)
            table[n] = f.at(n);
    return Json{{"f", degree_table(table)}};
}

ChainMap components_from_json(const Json& j, const Complex& source, const Complex& target, const std::string& path)
{
    const auto table = components_table(field(j, "f", path), source, target, child(path, "f"));
    return with_location(path, [&] { return ChainMap::make(source, target, table); });
}

Json to_json(const ChainMap& f)
{
    Json out{{"source", to_json(f.source())}, {"target", to_json(f.target())}};
    out["f"] = components_to_json(f)["f"];
    return out;
}

ChainMap chain_map_from_json(const Json& j, const std::string& path)
{
    const Complex source = complex_from_json(field(j, "source", path), child(path, "source"));
    const Complex target = complex_from_json(field(j, "target", path), child(path, "target"));
    return components_from_json(j, source, target, path);
}

Json to_json(const FilteredComplex& m)
{
    Json levels = Json::array();
    for (std::size_t k = 0; k <= m.length(); ++k)
        levels.push_back(to_json(m.level(k)));
    Json inclusions = Json::array();
    for (std::size_t k = 0; k < m.length(); ++k)
        inclusions.push_back(components_to_json(m.inclusion(k)));
    return Json{{"length", m.length()}, {"levels", std::move(levels)}, {"inclusions", std::move(inclusions)}};
}

FilteredComplex filtered_from_json(const Json& j, const std::string& path)
{
    const std::size_t length = natural(field(j, "length", path), child(path, "length"));
    if (length == 0)
        throw SchemaError(child(path, "length"), "filtration length must be positive");
    const Json& lj = array(field(j, "levels", path), child(path, "levels"));
    const Json& ij = array(field(j, "inclusions", path), child(path, "inclusions"));
    if (lj.size() != length + 1)
        throw SchemaError(child(path, "levels"), "expected length + 1 = " + std::to_string(length + 1) + " levels");
    if (ij.size() != length)
        throw SchemaError(child(path, "inclusions"), "expected " + std::to_string(length) + " inclusions");
    std::vector<Complex> levels;
    for (std::size_t k = 0; k <= length; ++k)
        levels.push_back(complex_from_json(lj[k], child(child(path, "levels"), k)));
    std::vector<ChainMap> inclusions;
    for (std::size_t k = 0; k < length; ++k)
        inclusions.push_back(
            components_from_json(ij[k], levels[k + 1], levels[k], child(child(path, "inclusions"), k)));
    return with_location(path, [&] { return FilteredComplex::make(levels, inclusions); });
}

Json to_json(const FilteredMap& f)
{
    Json levels = Json::array();
    for (std::size_t k = 0; k < f.level_count(); ++k)
        levels.push_back(components_to_json(f.level(k)));
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"levels", std::move(levels)}};
}

FilteredMap filtered_map_from_json(const Json& j, const std::string& path)
{
    const FilteredComplex source = filtered_from_json(field(j, "source", path), child(path, "source"));
    const FilteredComplex target = filtered_from_json(field(j, "target", path), child(path, "target"));
    const Json& lj = array(field(j, "levels", path), child(path, "levels"));
    const std::size_t count = std::max(source.length(), target.length());
    if (lj.size() != count)
        throw SchemaError(child(path, "levels"), "expected " + std::to_string(count) + " levels");
    std::vector<ChainMap> levels;
    for (std::size_t k = 0; k < count; ++k)
        levels.push_back(
            components_from_json(lj[k], source.level(k), target.level(k), child(child(path, "levels"), k)));
    return with_location(path, [&] { return FilteredMap::make(source, target, levels); });
}

Json to_json(const GradedModuleComplex& g)
{
    Json components = Json::array();
    for (const auto& c : g.components())
        components.push_back(to_json(c));
    if (components.empty())
        components.push_back(to_json(Complex{}));
    Json t_maps = Json::array();
    for (const auto& t : g.stored_t_maps())
        t_maps.push_back(components_to_json(t));
    return Json{{"top_weight", g.top_weight()}, {"components", std::move(components)}, {"t_maps", std::move(t_maps)}};
}

GradedModuleComplex graded_from_json(const Json& j, const std::string& path)
{
    const std::size_t top = natural(field(j, "top_weight", path), child(path, "top_weight"));
    const Json& cj = array(field(j, "components", path), child(path, "components"));
    const Json& tj = array(field(j, "t_maps", path), child(path, "t_maps"));
    if (cj.size() != top + 1)
        throw SchemaError(child(path, "components"), "expected top_weight + 1 = " + std::to_string(top + 1) +
                                                         " components");
    if (tj.size() != top)
        throw SchemaError(child(path, "t_maps"), "expected " + std::to_string(top) + " t-maps");
    std::vector<Complex> components;
    for (std::size_t w = 0; w <= top; ++w)
        components.push_back(complex_from_json(cj[w], child(child(path, "components"), w)));
    std::vector<ChainMap> t_maps;
    for (std::size_t w = 1; w <= top; ++w)
        t_maps.push_back(
            components_from_json(tj[w - 1], components[w], components[w - 1], child(child(path, "t_maps"), w - 1)));
    return with_location(path, [&] { return GradedModuleComplex::make(components, t_maps); });
}

Json to_json(const GrassPoint& p)
{
    return Json{{"V", to_json(p.V)},
                {"U", to_json(p.U)},
                {"W", to_json(p.W)},
                {"incl", components_to_json(p.incl)},
                {"phi", components_to_json(p.phi)}};
}

GrassPoint grass_point_from_json(const Json& j, const std::string& path)
{
    GrassPoint p;
    p.V = complex_from_json(field(j, "V", path), child(path, "V"));
    p.U = complex_from_json(field(j, "U", path), child(path, "U"));
    p.W = complex_from_json(field(j, "W", path), child(path, "W"));
    p.incl = components_from_json(field(j, "incl", path), p.U, p.W, child(path, "incl"));
    p.phi = components_from_json(field(j, "phi", path), p.W, p.V, child(path, "phi"));
    return p;
}

Json to_json(const FlagPoint& p)
{
    return Json{{"V", to_json(p.V)}, {"W", to_json(p.W)}, {"phi", components_to_json(p.phi)}};
}

FlagPoint flag_point_from_json(const Json& j, const std::string& path)
{
    FlagPoint p;
    p.V = complex_from_json(field(j, "V", path), child(path, "V"));
    p.W = filtered_from_json(field(j, "W", path), child(path, "W"));
    p.phi = components_from_json(field(j, "phi", path), p.W.ambient(), p.V, child(path, "phi"));
    return p;
}

Json to_json(const LiftingProblem& s)
{
    return Json{{"i", to_json(s.i)}, {"p", to_json(s.p)}, {"f", components_to_json(s.f)}, {"g", components_to_json(s.g)}};
}

LiftingProblem lifting_problem_from_json(const Json& j, const std::string& path)
{
    LiftingProblem s;
    s.i = chain_map_from_json(field(j, "i", path), child(path, "i"));
    s.p = chain_map_from_json(field(j, "p", path), child(path, "p"));
    s.f = components_from_json(field(j, "f", path), s.i.source(), s.p.source(), child(path, "f"));
    s.g = components_from_json(field(j, "g", path), s.i.target(), s.p.target(), child(path, "g"));
    return s;
}

Json to_json(const Shadow& s)
{
    Json out = Json::object();
    for (const auto& [n, b] : s.basis)
        out[std::to_string(n)] = Json{{"dim", s.dims.at(n)}, {"basis", matrix_to_json(b)}};
    return out;
}

Json to_json(const SimplicialVS& s)
{
    Json faces = Json::array();
    Json degeneracies = Json::array();
    for (std::size_t n = 1; n <= s.top_level(); ++n) {
        Json level = Json::array();
        for (std::size_t i = 0; i <= n; ++i)
            level.push_back(matrix_to_json(s.face(n, i)));
        faces.push_back(std::move(level));
    }
    for (std::size_t n = 0; n < s.top_level(); ++n) {
        Json level = Json::array();
        for (std::size_t j = 0; j <= n; ++j)
            level.push_back(matrix_to_json(s.degeneracy(n, j)));
        degeneracies.push_back(std::move(level));
    }
    return Json{{"dims", s.dims()}, {"faces", std::move(faces)}, {"degeneracies", std::move(degeneracies)}};
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace fdg
