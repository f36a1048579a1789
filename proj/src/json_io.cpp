#include "rdt/json_io.hpp"

#include <fstream>

#include "rdt/error.hpp"

namespace rdt {

namespace {

ordered_json rational_array(const QVector& v) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
    return a;
}

ordered_json matrix_rows(const QMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_array(m.row(i)));
    return rows;
}

Rational parse_entry(const ordered_json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw DomainError(where + ": expected a rational string or integer");
}

QVector parse_vector(const ordered_json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw DomainError(where + ": expected an array of length " + std::to_string(dim));
    QVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = parse_entry(j[i], where);
    return v;
}

QMatrix parse_matrix_rows(const ordered_json& j, std::size_t rows, std::size_t cols,
                          const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw DomainError(where + ": expected " + std::to_string(rows) + " rows");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        QVector r = parse_vector(j[i], cols, where + " row " + std::to_string(i));
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

}  // namespace

ordered_json datum_to_json(const EuclideanRootDatum& d) {
    ordered_json j;
    j["dim"] = d.ambient_dim();
    j["gram"] = matrix_rows(d.gram);
    ordered_json basis = ordered_json::array();
    for (std::size_t c = 0; c < d.lattice.rank(); ++c)
        basis.push_back(rational_array(d.lattice.basis().col(c)));
    j["lattice_basis"] = basis;
    ordered_json roots = ordered_json::array();
    for (const auto& a : d.roots.roots) roots.push_back(rational_array(a));
    j["roots"] = roots;
    return j;
}

EuclideanRootDatum datum_from_json(const ordered_json& j) {
    if (!j.is_object()) throw DomainError("datum: expected a JSON object");
    for (const char* key : {"dim", "gram", "lattice_basis", "roots"})
        if (!j.contains(key)) throw DomainError(std::string("datum: missing field '") + key + "'");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw DomainError("datum: 'dim' must be a positive integer");
    const std::size_t n = j["dim"].get<std::size_t>();

    QMatrix gram = parse_matrix_rows(j["gram"], n, n, "gram");
    if (!gram.is_symmetric()) throw DomainError("gram: matrix is not symmetric");
    if (!is_positive_definite(gram)) throw DomainError("gram: matrix is not positive definite");

    const auto& jb = j["lattice_basis"];
    if (!jb.is_array()) throw DomainError("lattice_basis: expected an array of columns");
    QMatrix basis(n, 0);
    for (std::size_t c = 0; c < jb.size(); ++c)
        basis.push_col(parse_vector(jb[c], n, "lattice_basis column " + std::to_string(c)));
    if (basis.rank() != basis.cols()) throw DomainError("lattice_basis: dependent columns");

    const auto& jr = j["roots"];
    if (!jr.is_array()) throw DomainError("roots: expected an array of covector rows");
    std::vector<QVector> roots;
    for (std::size_t i = 0; i < jr.size(); ++i)
        roots.push_back(parse_vector(jr[i], n, "roots row " + std::to_string(i)));

    return EuclideanRootDatum(std::move(gram), std::move(basis), std::move(roots));
}

EuclideanRootDatum load_datum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open datum file '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("datum file '" + path + "': " + e.what());
    }
    try {
        return datum_from_json(j);
    } catch (const DomainError& e) {
        throw DomainError("datum file '" + path + "': " + e.what());
    }
}

void save_datum_file(const EuclideanRootDatum& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write datum file '" + path + "'");
    out << datum_to_json(d).dump(2) << '\n';
}

ordered_json lattice_to_json(const Lattice& L) {
    ordered_json j;
    j["dim"] = L.ambient_dim();
    j["gram"] = matrix_rows(L.gram());
    ordered_json basis = ordered_json::array();
    for (std::size_t c = 0; c < L.rank(); ++c) basis.push_back(rational_array(L.basis().col(c)));
    j["basis"] = basis;
    return j;
}

Lattice lattice_from_json(const ordered_json& j) {
    if (!j.is_object()) throw DomainError("lattice: expected a JSON object");
    for (const char* key : {"dim", "gram", "basis"})
        if (!j.contains(key)) throw DomainError(std::string("lattice: missing field '") + key + "'");
    const std::size_t n = j["dim"].get<std::size_t>();
    QMatrix gram = parse_matrix_rows(j["gram"], n, n, "gram");
    QMatrix basis(n, 0);
    for (std::size_t c = 0; c < j["basis"].size(); ++c)
        basis.push_col(parse_vector(j["basis"][c], n, "basis column " + std::to_string(c)));
    return Lattice(std::move(gram), std::move(basis));
}

ordered_json group_to_json(const AbelianGroupStructure& g) {
    ordered_json j;
    j["name"] = g.str();
    j["free_rank"] = g.free_rank;
    ordered_json f = ordered_json::array();
    for (const auto& v : g.invariant_factors) f.push_back(v.get_str());
    j["invariant_factors"] = f;
    return j;
}

ordered_json classification_to_json(const ClassificationReport& rep) {
    ordered_json j;
    j["type"] = rep.datum_type.str();
    j["family"] = family_name(rep.datum_type.family);
    j["rank"] = rep.datum_type.rank;
    j["display_rank"] = rep.datum_type.display_rank();
    j["length2"] = rep.datum_type.length_sq.str();
    j["case"] = rep.orbit_case == OrbitCase::I ? "I" : "II";
    j["pi1"] = rep.fundamental_group.str();
    j["pi1_structure"] = group_to_json(rep.fundamental_group);
    ordered_json basis = ordered_json::array();
    for (const auto& v : rep.cubic_basis.vectors) basis.push_back(rational_array(v));
    j["cubic_basis"] = basis;
    j["signs"] = rep.sign_vector;
    return j;
}

ordered_json spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json item;
        item["k"] = e.k;
        item["lambda_scaled"] = e.lambda_scaled.str();
        arr.push_back(item);
    }
    return arr;
}

ordered_json check_report_to_json(const CheckReport& rep) {
    ordered_json j;
    j["max_planarity_residual"] = rep.max_planarity_residual;
    j["max_orthogonality_residual"] = rep.max_orthogonality_residual;
    j["max_metric_distortion"] = rep.max_metric_distortion;
    j["lattice_closure_residual"] = rep.lattice_closure_residual;
    j["pass"] = rep.pass;
    return j;
}

}  // namespace rdt
