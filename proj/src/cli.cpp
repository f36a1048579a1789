#include "rdt/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rdt/embedding.hpp"
#include "rdt/error.hpp"
#include "rdt/json_io.hpp"
#include "rdt/spectrum.hpp"

namespace rdt {

namespace {

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

int emit_error(std::ostream& out, const std::string& msg) {
    ordered_json j;
    j["status"] = "error";
    j["message"] = msg;
    emit(out, j);
    return 2;
}

MultiplicitySet parse_mults(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            long x = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            throw DomainError("malformed multiplicity '" + tok + "' in --mults");
        }
    }
    if (v.size() != 4) throw DomainError("--mults expects four values m1,m2,m+,m-");
    return MultiplicitySet{v[0], v[1], v[2], v[3]};
}

// Classify with the standard negative-finding report on failure.
std::optional<ClassificationReport> classify_or_report(const EuclideanRootDatum& d,
                                                       std::ostream& out, int& code) {
    try {
        return classify(d);
    } catch (const NotRectangularError& e) {
        ordered_json j;
        j["status"] = "invalid";
        j["reason"] = "not_rectangular";
        j["message"] = e.what();
        emit(out, j);
    } catch (const DecomposableError& e) {
        ordered_json j;
        j["status"] = "invalid";
        j["reason"] = "decomposable";
        j["message"] = e.what();
        ordered_json fs = ordered_json::array();
        for (const auto& f : e.factors) fs.push_back(datum_to_json(f));
        j["factors"] = fs;
        emit(out, j);
    } catch (const DomainError& e) {
        ordered_json j;
        j["status"] = "invalid";
        j["message"] = e.what();
        emit(out, j);
    }
    code = 1;
    return std::nullopt;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rdt: exact toolkit for Euclidean root data of compact symmetric spaces"};
    app.require_subcommand(1);

    std::string file, file2, out_path, type_str, length2_str = "1", mults_str, bound_str, csv_path;
    std::size_t rank = 0;
    std::size_t samples = 64;
    double tol = 1e-9, zero_radius = 0.0;

    auto* c_validate = app.add_subcommand("validate", "check the datum axioms and inclusions");
    c_validate->add_option("file", file, "datum JSON file")->required();

    auto* c_standard = app.add_subcommand("standard", "emit a standard datum of a given type");
    c_standard->add_option("--type", type_str, "family letter: A, B, C, D or BC")->required();
    c_standard->add_option("--rank", rank, "torus rank (ambient dimension)")->required();
    c_standard->add_option("--length2", length2_str, "squared basis length L^2 (rational)");
    c_standard->add_option("-o,--output", out_path, "write the datum here instead of stdout");

    auto* c_classify = app.add_subcommand("classify", "classify an indecomposable datum");
    c_classify->add_option("file", file, "datum JSON file")->required();

    auto* c_pi1 = app.add_subcommand("pi1", "fundamental group Gamma/Gamma0");
    c_pi1->add_option("file", file, "datum JSON file")->required();

    auto* c_split = app.add_subcommand("split", "finest orthogonal decomposition");
    c_split->add_option("file", file, "datum JSON file")->required();

    auto* c_poly = app.add_subcommand("polysphere", "full-rank polysphere predicate");
    c_poly->add_option("file", file, "datum JSON file")->required();

    auto* c_iso = app.add_subcommand("iso", "isomorphism test between two data");
    c_iso->add_option("file1", file, "first datum")->required();
    c_iso->add_option("file2", file2, "second datum")->required();

    auto* c_spec = app.add_subcommand("spectrum", "Laplace eigenvalues up to a bound");
    c_spec->add_option("file", file, "datum JSON file")->required();
    c_spec->add_option("--mults", mults_str, "multiplicities m1,m2,m+,m-")->required();
    c_spec->add_option("--bound", bound_str, "scaled eigenvalue bound (rational)")->required();

    auto* c_first = app.add_subcommand("first-eigencheck", "is eps_1 in the first eigenspace");
    c_first->add_option("file", file, "datum JSON file")->required();
    c_first->add_option("--mults", mults_str, "multiplicities m1,m2,m+,m-")->required();

    auto* c_embed = app.add_subcommand("embed", "build and verify the torus embedding");
    c_embed->add_option("file", file, "datum JSON file")->required();
    c_embed->add_option("--samples", samples, "samples per generating circle");
    c_embed->add_option("--tol", tol, "check tolerance");
    c_embed->add_option("--a", zero_radius, "zero-weight component radius");
    c_embed->add_option("--csv", csv_path, "write sampled image points here");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_validate) {
            EuclideanRootDatum d = load_datum_file(file);
            DatumDiagnostics diag = validate(d);
            ordered_json j;
            j["status"] = diag.ok ? "ok" : "invalid";
            j["issues"] = diag.issues;
            emit(out, j);
            return diag.ok ? 0 : 1;
        }

        if (*c_standard) {
            auto fam = parse_family(type_str);
            if (!fam) return emit_error(out, "unknown family '" + type_str + "'");
            DatumType t{*fam, rank, Rational::parse(length2_str)};
            EuclideanRootDatum d = make_standard(t);
            if (!out_path.empty()) {
                save_datum_file(d, out_path);
                ordered_json j;
                j["status"] = "ok";
                j["type"] = t.str();
                j["written"] = out_path;
                emit(out, j);
            } else {
                emit(out, datum_to_json(d));
            }
            return 0;
        }

        if (*c_classify) {
            EuclideanRootDatum d = load_datum_file(file);
            int code = 0;
            auto rep = classify_or_report(d, out, code);
            if (!rep) return code;
            ordered_json j;
            j["status"] = "ok";
            j.update(classification_to_json(*rep));
            emit(out, j);
            return 0;
        }

        if (*c_pi1) {
            EuclideanRootDatum d = load_datum_file(file);
            DatumDiagnostics diag = validate(d);
            if (!diag.ok) {
                ordered_json j;
                j["status"] = "invalid";
                j["issues"] = diag.issues;
                emit(out, j);
                return 1;
            }
            AbelianGroupStructure g = fundamental_group(d);
            ordered_json j;
            j["status"] = "ok";
            j["pi1"] = g.str();
            j["pi1_structure"] = group_to_json(g);
            emit(out, j);
            return 0;
        }

        if (*c_split) {
            EuclideanRootDatum d = load_datum_file(file);
            DatumDiagnostics diag = validate(d);
            if (!diag.ok) {
                ordered_json j;
                j["status"] = "invalid";
                j["issues"] = diag.issues;
                emit(out, j);
                return 1;
            }
            auto factors = split(d);
            ordered_json j;
            j["status"] = "ok";
            j["indecomposable"] = factors.size() == 1;
            ordered_json fs = ordered_json::array();
            for (const auto& f : factors) fs.push_back(datum_to_json(f));
            j["factors"] = fs;
            emit(out, j);
            return 0;
        }

        if (*c_poly) {
            EuclideanRootDatum d = load_datum_file(file);
            DatumDiagnostics diag = validate(d);
            if (!diag.ok) {
                ordered_json j;
                j["status"] = "invalid";
                j["issues"] = diag.issues;
                emit(out, j);
                return 1;
            }
            bool b = admits_polysphere(d);
            ordered_json j;
            j["status"] = "ok";
            j["admits_polysphere"] = b;
            emit(out, j);
            return b ? 0 : 1;
        }

        if (*c_iso) {
            EuclideanRootDatum d1 = load_datum_file(file);
            EuclideanRootDatum d2 = load_datum_file(file2);
            auto phi = is_isomorphic(d1, d2);
            ordered_json j;
            j["status"] = "ok";
            j["isomorphic"] = phi.has_value();
            if (phi) {
                ordered_json rows = ordered_json::array();
                for (std::size_t i = 0; i < phi->rows(); ++i) {
                    ordered_json row = ordered_json::array();
                    for (std::size_t c = 0; c < phi->cols(); ++c) row.push_back((*phi)(i, c).str());
                    rows.push_back(row);
                }
                j["isometry"] = rows;
            } else {
                j["message"] = "not isomorphic";
            }
            emit(out, j);
            return phi ? 0 : 1;
        }

        if (*c_spec || *c_first) {
            EuclideanRootDatum d = load_datum_file(file);
            int code = 0;
            auto rep = classify_or_report(d, out, code);
            if (!rep) return code;
            MultiplicitySet m = parse_mults(mults_str);
            check_multiplicities(rep->datum_type, m);  // DomainError -> usage error
            if (*c_spec) {
                Rational bound = Rational::parse(bound_str);
                auto entries = enumerate_spectrum(rep->datum_type, m, bound);
                ordered_json j;
                j["status"] = "ok";
                j["type"] = rep->datum_type.str();
                j["bound"] = bound.str();
                j["entries"] = spectrum_to_json(entries);
                emit(out, j);
                return 0;
            }
            bool b = first_eigenspace_check(rep->datum_type, m);
            ordered_json j;
            j["status"] = "ok";
            j["type"] = rep->datum_type.str();
            j["first_eigenspace"] = b;
            emit(out, j);
            return b ? 0 : 1;
        }

        if (*c_embed) {
            EuclideanRootDatum d = load_datum_file(file);
            int code = 0;
            auto rep = classify_or_report(d, out, code);
            if (!rep) return code;
            TorusEmbedding e = build_torus_embedding(*rep, zero_radius);
            CheckReport cr = run_checks(e, samples, tol);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) return emit_error(out, "cannot write '" + csv_path + "'");
                for (std::size_t j = 0; j < e.rank; ++j)
                    for (std::size_t s = 0; s < samples; ++s) {
                        std::vector<double> H(e.rank, 0.0);
                        H[j] = static_cast<double>(s) / static_cast<double>(samples);
                        auto img = phi_torus(e, H);
                        for (std::size_t i = 0; i < H.size(); ++i)
                            csv << (i ? "," : "") << fmt17(H[i]);
                        for (double v : img) csv << ',' << fmt17(v);
                        csv << '\n';
                    }
            }
            ordered_json j;
            j["status"] = cr.pass ? "ok" : "invalid";
            j["type"] = rep->datum_type.str();
            j["samples"] = samples;
            j["tol"] = tol;
            j["check_report"] = check_report_to_json(cr);
            emit(out, j);
            return cr.pass ? 0 : 1;
        }
    } catch (const DomainError& e) {
        return emit_error(out, e.what());
    } catch (const ResourceError& e) {
        return emit_error(out, e.what());
    } catch (const Error& e) {
        return emit_error(out, e.what());
    }
    err << "no subcommand dispatched\n";
    return 2;
}

}  // namespace rdt
