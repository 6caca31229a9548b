#include "orbicat/json_io.hpp"

#include <cstdlib>
#include <fstream>

namespace orbicat {

Field parse_field(const std::string& name) {
    if (name == "Q") return Field::Q;
    if (name == "Qi") return Field::Qi;
    throw ParseError("unknown field '" + name + "' (expected Q or Qi)");
}

void apply_field(const Json& j, bool* field_fixed) {
    Field want = Field::Q;
    if (j.contains("field")) {
        want = parse_field(j.at("field").get<std::string>());
    } else if (const char* env = std::getenv("ORBICAT_FIELD")) {
        want = parse_field(env);
    }
    if (field_fixed && *field_fixed) {
        if (current_field() != want)
            throw ParseError("mixing ground fields within one computation");
        return;
    }
    set_field(want);
    if (field_fixed) *field_fixed = true;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw ParseError("scalar must be an integer or a string");
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    int rows = int(j.size());
    int cols = rows ? int(j.at(0).size()) : 0;
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (int(j.at(r).size()) != cols) throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(j.at(r).at(c));
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

namespace {

Vec vec_from_json(const Json& j, int dim, const char* what) {
    if (!j.is_array() || int(j.size()) != dim)
        throw ParseError(std::string(what) + " must be an array of length dim");
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = scalar_from_json(j.at(i));
    return v;
}

} // namespace

AlgebraRef algebra_from_json(const Json& j, const std::filesystem::path& base_dir,
                             bool* field_fixed) {
    if (j.is_string()) // reference to another fixture file
        return algebra_from_json(read_json_file(base_dir / j.get<std::string>()), base_dir,
                                 field_fixed);
    apply_field(j, field_fixed);
    Algebra a;
    a.dim = j.at("dim").get<int>();
    if (a.dim <= 0) throw ParseError("algebra dim must be positive");
    if (j.contains("labels")) a.labels = j.at("labels").get<std::vector<std::string>>();
    a.c.assign(std::size_t(a.dim) * a.dim * a.dim, Scalar());
    for (const auto& t : j.at("structure_constants")) {
        if (!t.is_array() || t.size() != 4)
            throw ParseError("structure constant entries are [i,j,k,\"c\"]");
        int i = t.at(0).get<int>(), jj = t.at(1).get<int>(), k = t.at(2).get<int>();
        if (i < 0 || i >= a.dim || jj < 0 || jj >= a.dim || k < 0 || k >= a.dim)
            throw ParseError("structure constant index out of range");
        a.sc(i, jj, k) = scalar_from_json(t.at(3));
    }
    a.unit = vec_from_json(j.at("unit"), a.dim, "unit");
    if (j.contains("grading")) {
        a.grading = j.at("grading").get<std::vector<int>>();
        for (int p : a.grading)
            if (p != 0 && p != 1) throw ParseError("grading entries must be 0 or 1");
    }
    Vec counit = vec_from_json(j.at("counit"), a.dim, "counit");
    std::optional<std::vector<Matrix>> delta;
    if (j.contains("comultiplication")) {
        std::vector<Matrix> d;
        for (const auto& m : j.at("comultiplication")) d.push_back(matrix_from_json(m));
        delta = std::move(d);
    }
    return std::make_shared<const FrobeniusAlgebra>(
        build_frobenius(std::move(a), std::move(counit), delta ? &*delta : nullptr));
}

Bimodule bimodule_from_json(const Json& j, const std::filesystem::path& base_dir,
                            bool* field_fixed) {
    apply_field(j, field_fixed);
    AlgebraRef left = algebra_from_json(j.at("left_algebra"), base_dir, field_fixed);
    AlgebraRef right = algebra_from_json(j.at("right_algebra"), base_dir, field_fixed);
    int dim = j.at("dim").get<int>();
    auto acts = [dim](const Json& arr, const char* what) {
        std::vector<Matrix> out;
        for (const auto& m : arr) {
            Matrix mat = matrix_from_json(m);
            if (mat.rows() != dim || mat.cols() != dim)
                throw ParseError(std::string(what) + " matrices must be dim x dim");
            out.push_back(std::move(mat));
        }
        return out;
    };
    std::vector<int> grading;
    if (j.contains("grading")) grading = j.at("grading").get<std::vector<int>>();
    return make_bimodule(left, right, acts(j.at("left_actions"), "left_actions"),
                         acts(j.at("right_actions"), "right_actions"), grading);
}

CombSurface surface_from_json(const Json& j) {
    CombSurface s;
    for (const auto& t : j.at("triangles")) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("triangles are triples of edge ids");
        s.triangles.push_back({{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()}});
    }
    for (const auto& g : j.at("gluings")) {
        if (!g.is_array() || g.size() != 3) throw ParseError("gluings are [a,b,\"+1\"|\"-1\"]");
        std::string sign = g.at(2).is_string() ? g.at(2).get<std::string>()
                                               : std::to_string(g.at(2).get<int>());
        if (sign != "+1" && sign != "-1" && sign != "1")
            throw ParseError("gluing sign must be \"+1\" or \"-1\"");
        s.gluings.push_back({g.at(0).get<int>(), g.at(1).get<int>(), sign == "-1" ? -1 : 1});
    }
    s.validate();
    return s;
}

Matrix involution_from_json(const Json& j) {
    const Json& m = j.contains("matrix") ? j.at("matrix") : j;
    Matrix theta = matrix_from_json(m);
    if (theta.rows() != theta.cols()) throw ParseError("involution matrix must be square");
    return theta;
}

LoadedCategory category_from_json(const Json& j) {
    LoadedCategory out;
    FiniteCategory& c = out.cat;
    c.objects = j.at("objects").get<std::vector<std::string>>();
    auto oidx = [&c](const std::string& name) {
        for (int i = 0; i < c.nobj(); ++i)
            if (c.objects[i] == name) return i;
        throw ParseError("unknown object '" + name + "'");
    };
    std::map<std::string, int> midx;
    for (const auto& m : j.at("morphisms")) {
        std::string name = m.at("name").get<std::string>();
        if (midx.count(name)) throw ParseError("duplicate morphism '" + name + "'");
        midx[name] = c.nmor();
        c.morphisms.push_back({name, oidx(m.at("src").get<std::string>()),
                               oidx(m.at("dst").get<std::string>())});
    }
    auto mref = [&midx](const Json& v) {
        auto it = midx.find(v.get<std::string>());
        if (it == midx.end()) throw ParseError("unknown morphism '" + v.get<std::string>() + "'");
        return it->second;
    };
    c.identity.resize(c.nobj());
    for (int o = 0; o < c.nobj(); ++o)
        c.identity[o] = mref(j.at("identity").at(c.objects[o]));
    c.table.assign(std::size_t(c.nmor()) * c.nmor(), -1);
    for (const auto& t : j.at("composition")) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("composition entries are [f,g,h] with h = g after f");
        int f = mref(t.at(0)), g = mref(t.at(1)), h = mref(t.at(2));
        c.table[std::size_t(g) * c.nmor() + f] = h;
    }
    c.validate();

    if (j.contains("volution")) {
        const Json& v = j.at("volution");
        FiniteVolution vol;
        vol.d_obj.resize(c.nobj());
        vol.eta.resize(c.nobj());
        for (int o = 0; o < c.nobj(); ++o) {
            vol.d_obj[o] = oidx(v.at("d_obj").at(c.objects[o]).get<std::string>());
            vol.eta[o] = mref(v.at("eta").at(c.objects[o]));
        }
        vol.d_mor.resize(c.nmor());
        for (int m = 0; m < c.nmor(); ++m)
            vol.d_mor[m] = mref(v.at("d_mor").at(c.morphisms[m].label));
        out.volution = std::move(vol);
    }
    return out;
}

} // namespace orbicat
